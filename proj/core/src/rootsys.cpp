#include "chev/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace chev {

namespace {

struct Diagram {
  std::vector<Rational> lengths;  // {α_i, α_i}
  std::vector<std::pair<int, int>> edges;  // 0-based
};

bool valid_entry(char type, int rank) {
  switch (type) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

Diagram diagram(char type, int n) {
  Diagram d;
  d.lengths.assign(static_cast<std::size_t>(n), Rational(2));
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) d.edges.emplace_back(i, i + 1);
  };
  switch (type) {
    case 'A': chain(n); break;
    case 'B':
      chain(n);
      d.lengths[n - 1] = 1;
      break;
    case 'C':
      chain(n);
      for (int i = 0; i + 1 < n; ++i) d.lengths[i] = 1;
      break;
    case 'D':
      chain(n - 1);
      d.edges.emplace_back(n - 3, n - 1);
      break;
    case 'E':
      d.edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      for (int i = 4; i + 1 < n; ++i) d.edges.emplace_back(i, i + 1);
      break;
    case 'F':
      chain(4);
      d.lengths[2] = 1;
      d.lengths[3] = 1;
      break;
    case 'G':
      chain(2);
      d.lengths[0] = make_rational(2, 3);
      break;
    default: break;
  }
  return d;
}

}  // namespace

std::size_t classification_root_count(char type, int n) {
  if (!valid_entry(type, n)) throw std::invalid_argument("invalid root system type");
  auto r = static_cast<std::size_t>(n);
  switch (type) {
    case 'A': return r * (r + 1);
    case 'B':
    case 'C': return 2 * r * r;
    case 'D': return 2 * r * (r - 1);
    case 'E': return n == 6 ? 72 : n == 7 ? 126 : 240;
    case 'F': return 48;
    default: return 12;
  }
}

RootSystem RootSystem::build(char type, int rank) {
  if (!valid_entry(type, rank)) {
    throw std::invalid_argument("no root system of type " + std::string(1, type) + std::to_string(rank));
  }
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  const auto n = static_cast<std::size_t>(rank);
  Diagram dg = diagram(type, rank);

  rs.gram_ = QMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) rs.gram_(i, i) = dg.lengths[i];
  for (auto [i, j] : dg.edges) {
    // Adjacent simple roots: {α_i, α_j} = -max(|α_i|², |α_j|²)/2.
    Rational v = -std::max(dg.lengths[i], dg.lengths[j]) / 2;
    rs.gram_(i, j) = v;
    rs.gram_(j, i) = v;
  }
  rs.cartan_.assign(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational c = 2 * rs.gram_(i, j) / rs.gram_(j, j);
      if (c.get_den() != 1) throw std::logic_error("non-integral Cartan entry");
      rs.cartan_[i][j] = static_cast<int>(c.get_num().get_si());
    }
  }

  // Close the simple roots under simple reflections.
  std::set<RootCoords> found;
  std::deque<RootCoords> queue;
  for (std::size_t i = 0; i < n; ++i) {
    RootCoords e(n, 0);
    e[i] = 1;
    found.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    RootCoords v = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      int c = 0;
      for (std::size_t j = 0; j < n; ++j) c += v[j] * rs.cartan_[j][i];
      RootCoords w = v;
      w[i] -= c;
      if (found.insert(w).second) queue.push_back(w);
    }
  }

  std::vector<RootCoords> roots(found.begin(), found.end());
  auto height_of = [](const RootCoords& c) { return std::accumulate(c.begin(), c.end(), 0); };
  std::sort(roots.begin(), roots.end(), [&](const RootCoords& a, const RootCoords& b) {
    int ha = height_of(a);
    int hb = height_of(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  rs.roots_ = roots;
  for (RootId r = 0; r < roots.size(); ++r) {
    rs.index_[roots[r]] = r;
    rs.heights_.push_back(height_of(roots[r]));
    const auto& c = roots[r];
    bool nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
    bool nonpos = std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
    if (!nonneg && !nonpos) throw std::logic_error("root with mixed-sign coordinates");
  }
  for (RootId r = 0; r < roots.size(); ++r) {
    RootCoords neg = roots[r];
    for (auto& x : neg) x = -x;
    rs.negation_.push_back(rs.index_.at(neg));
    if (rs.heights_[r] > 0) rs.positive_.push_back(r);
  }
  for (std::size_t i = 0; i < n; ++i) {
    RootCoords e(n, 0);
    e[i] = 1;
    rs.simple_.push_back(rs.index_.at(e));
  }
  if (rs.size() != classification_root_count(type, rank)) throw std::logic_error("root count mismatch");
  return rs;
}

QVector RootSystem::vector(RootId r) const {
  const auto& c = roots_.at(r);
  QVector v(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) v[i] = c[i];
  return v;
}

RootId RootSystem::simple(int i) const {
  if (i < 1 || i > rank_) throw std::out_of_range("simple root index " + std::to_string(i) + " out of range");
  return simple_[static_cast<std::size_t>(i - 1)];
}

std::optional<RootId> RootSystem::find(const RootCoords& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Rational RootSystem::inner(const QVector& v, const QVector& w) const {
  if (v.size() != static_cast<std::size_t>(rank_) || w.size() != v.size()) {
    throw std::invalid_argument("vector dimension does not match rank");
  }
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (sgn(w[j]) != 0) s += v[i] * gram_(i, j) * w[j];
    }
  }
  return s;
}

Rational RootSystem::pair(const QVector& v, const QVector& w) const {
  Rational ww = inner(w, w);
  if (sgn(ww) == 0) throw std::invalid_argument("pairing against the zero vector");
  return 2 * inner(v, w) / ww;
}

int RootSystem::pair(RootId beta, RootId alpha) const {
  Rational c = pair(vector(beta), vector(alpha));
  return static_cast<int>(c.get_num().get_si());
}

Rational RootSystem::length_squared(RootId r) const {
  QVector v = vector(r);
  return inner(v, v);
}

std::string RootSystem::name(RootId r) const {
  const auto& c = coords(r);
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    int a = c[i];
    if (a < 0) {
      out += "-";
      a = -a;
    } else if (!out.empty()) {
      out += "+";
    }
    if (a != 1) out += std::to_string(a);
    out += "a" + std::to_string(i + 1);
  }
  return out;
}

QVector RootSystem::reflect(RootId alpha, const QVector& v) const {
  QVector a = vector(alpha);
  return v - pair(v, a) * a;
}

RootId RootSystem::reflect(RootId alpha, RootId beta) const {
  QVector w = reflect(alpha, vector(beta));
  RootCoords c(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) c[i] = static_cast<int>(w[i].get_num().get_si());
  auto r = find(c);
  if (!r) throw std::logic_error("reflection left the root system");
  return *r;
}

std::vector<IntervalEntry> RootSystem::interval(RootId alpha, RootId beta) const {
  if (alpha == beta || alpha == negate(beta)) throw std::invalid_argument("interval needs alpha != ±beta");
  std::vector<IntervalEntry> out;
  const auto& a = coords(alpha);
  const auto& b = coords(beta);
  // Coefficients never exceed 3 (G2); 4 leaves a margin for the search.
  for (int total = 2; total <= 8; ++total) {
    for (int i = 1; i < total; ++i) {
      int j = total - i;
      if (i > 4 || j > 4) continue;
      RootCoords c(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) c[k] = i * a[k] + j * b[k];
      if (auto r = find(c)) out.push_back({*r, i, j});
    }
  }
  return out;
}

unsigned long long RootSystem::weyl_order() const {
  auto fact = [](int k) {
    unsigned long long f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<unsigned long long>(i);
    return f;
  };
  switch (type_) {
    case 'A': return fact(rank_ + 1);
    case 'B':
    case 'C': return (1ULL << rank_) * fact(rank_);
    case 'D': return (1ULL << (rank_ - 1)) * fact(rank_);
    case 'E': return rank_ == 6 ? 51840ULL : rank_ == 7 ? 2903040ULL : 696729600ULL;
    case 'F': return 1152;
    default: return 12;
  }
}

int RootSystem::coxeter_number() const {
  switch (type_) {
    case 'A': return rank_ + 1;
    case 'B':
    case 'C': return 2 * rank_;
    case 'D': return 2 * rank_ - 2;
    case 'E': return rank_ == 6 ? 12 : rank_ == 7 ? 18 : 30;
    case 'F': return 12;
    default: return 6;
  }
}

}  // namespace chev
