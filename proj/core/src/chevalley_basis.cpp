#include "chev/chevalley.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>

namespace chev {

namespace {

constexpr int kUnknown = 0x7fffffff;

long checked_integer(const Rational& q, const char* what) {
  if (q.get_den() != 1) throw std::logic_error(std::string("non-integral ") + what);
  return q.get_num().get_si();
}

void add_term(LieVector& v, std::size_t index, long coeff) {
  if (coeff == 0) return;
  for (auto& [i, c] : v) {
    if (i == index) {
      c += coeff;
      return;
    }
  }
  v.emplace_back(index, coeff);
}

LieVector compact(LieVector v) {
  v.erase(std::remove_if(v.begin(), v.end(), [](const auto& t) { return t.second == 0; }), v.end());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

bool IntMatrix::is_zero() const {
  return std::all_of(data.begin(), data.end(), [](long x) { return x == 0; });
}

ChevalleyBasis ChevalleyBasis::build(char type, int rank) {
  return ChevalleyBasis(std::make_shared<const RootSystem>(RootSystem::build(type, rank)));
}

ChevalleyBasis::ChevalleyBasis(std::shared_ptr<const RootSystem> rs) : rs_(std::move(rs)) {
  const RootSystem& R = *rs_;
  const std::size_t nroots = R.size();
  const auto rank = static_cast<std::size_t>(R.rank());

  // Roots are stored by increasing height; walk them backwards and slot the
  // Cartan block in where the heights change sign.
  root_pos_.assign(nroots, 0);
  cartan_pos_.assign(rank, 0);
  bool cartan_placed = false;
  for (std::size_t k = nroots; k-- > 0;) {
    if (!cartan_placed && !R.is_positive(k)) {
      for (std::size_t i = 0; i < rank; ++i) {
        cartan_pos_[i] = labels_.size();
        labels_.push_back({false, 0, static_cast<int>(i + 1)});
      }
      cartan_placed = true;
    }
    root_pos_[k] = labels_.size();
    labels_.push_back({true, k, 0});
  }

  coroots_.resize(nroots);
  for (RootId r = 0; r < nroots; ++r) {
    const auto& c = R.coords(r);
    Rational len = R.length_squared(r);
    for (std::size_t i = 0; i < rank; ++i) {
      coroots_[r].push_back(static_cast<int>(checked_integer(c[i] * R.gram()(i, i) / len, "coroot")));
    }
  }

  sums_.assign(nroots * nroots, std::nullopt);
  for (RootId a = 0; a < nroots; ++a) {
    for (RootId b = 0; b < nroots; ++b) {
      RootCoords s = R.coords(a);
      const auto& cb = R.coords(b);
      for (std::size_t i = 0; i < rank; ++i) s[i] += cb[i];
      sums_[a * nroots + b] = R.find(s);
    }
  }

  compute_structure_constants();
  compute_divided_powers();
}

std::optional<RootId> ChevalleyBasis::root_sum(RootId a, RootId b) const { return sums_.at(a * rs_->size() + b); }

int ChevalleyBasis::structure_constant(RootId a, RootId b) const { return constants_.at(a * rs_->size() + b); }

void ChevalleyBasis::compute_structure_constants() {
  const RootSystem& R = *rs_;
  const std::size_t n = R.size();
  std::vector<int> table(n * n, kUnknown);
  auto len = [&](RootId r) { return R.length_squared(r); };
  // p = largest k with β - kα ∈ Φ.
  auto string_p = [&](RootId a, RootId b) {
    int p = 0;
    RootCoords cur = R.coords(b);
    const auto& ca = R.coords(a);
    while (true) {
      for (std::size_t i = 0; i < cur.size(); ++i) cur[i] -= ca[i];
      if (!R.find(cur)) return p;
      ++p;
    }
  };

  std::function<int(RootId, RootId)> get;
  std::function<void(RootId)> solve_sum;

  get = [&](RootId x, RootId y) -> int {
    auto s = root_sum(x, y);
    if (!s) return 0;
    int& slot = table[x * n + y];
    if (slot != kUnknown) return slot;
    bool px = R.is_positive(x);
    bool py = R.is_positive(y);
    int value = 0;
    if (px && py) {
      solve_sum(*s);
      return table[x * n + y];
    }
    if (!px && !py) {
      value = -get(R.negate(x), R.negate(y));
    } else {
      // x + y + z = 0: N_{x,y}/{z,z} = N_{y,z}/{x,x} = N_{z,x}/{y,y}.
      RootId z = R.negate(*s);
      if (R.is_positive(y) == R.is_positive(z)) {
        value = static_cast<int>(checked_integer(len(z) / len(x) * get(y, z), "structure constant"));
      } else {
        value = static_cast<int>(checked_integer(len(z) / len(y) * get(z, x), "structure constant"));
      }
    }
    table[x * n + y] = value;
    return value;
  };

  solve_sum = [&](RootId xi) {
    std::vector<std::pair<RootId, RootId>> special;
    for (RootId a : R.positive_roots()) {
      for (RootId b : R.positive_roots()) {
        if (a < b && root_sum(a, b) == xi) special.emplace_back(a, b);
      }
    }
    if (special.empty()) return;
    std::sort(special.begin(), special.end());
    auto [a0, b0] = special.front();
    int n0 = string_p(a0, b0) + 1;
    table[a0 * n + b0] = n0;
    table[b0 * n + a0] = -n0;
    for (std::size_t k = 1; k < special.size(); ++k) {
      auto [a, b] = special[k];
      // Four-root relation on (α, β, -α₀, -β₀).
      Rational bracket = 0;
      RootId na0 = R.negate(a0);
      RootId nb0 = R.negate(b0);
      if (auto s1 = root_sum(b, na0); s1 && root_sum(a, nb0)) {
        bracket += Rational(get(b, na0) * get(a, nb0)) / len(*s1);
      }
      if (auto s2 = root_sum(na0, a); s2 && root_sum(b, nb0)) {
        bracket += Rational(get(na0, a) * get(b, nb0)) / len(*s2);
      }
      int value = static_cast<int>(checked_integer(len(xi) / n0 * bracket, "structure constant"));
      table[a * n + b] = value;
      table[b * n + a] = -value;
    }
  };

  constants_.assign(n * n, 0);
  for (RootId a = 0; a < n; ++a) {
    for (RootId b = 0; b < n; ++b) {
      if (root_sum(a, b)) constants_[a * n + b] = get(a, b);
    }
  }
}

LieVector ChevalleyBasis::bracket(std::size_t a, std::size_t b) const {
  const BasisLabel& la = labels_.at(a);
  const BasisLabel& lb = labels_.at(b);
  const RootSystem& R = *rs_;
  LieVector out;
  if (!la.is_root && !lb.is_root) return out;
  if (!la.is_root) {
    // [h_i, e_β] = ⟨β, α_i⟩ e_β
    out.emplace_back(b, R.pair(lb.root, R.simple(la.cartan)));
    return compact(out);
  }
  if (!lb.is_root) {
    out.emplace_back(a, -R.pair(la.root, R.simple(lb.cartan)));
    return compact(out);
  }
  if (lb.root == R.negate(la.root)) {
    const auto& co = coroots_[la.root];
    for (std::size_t i = 0; i < co.size(); ++i) out.emplace_back(cartan_pos_[i], co[i]);
    return compact(out);
  }
  if (auto s = root_sum(la.root, lb.root)) out.emplace_back(root_pos_[*s], structure_constant(la.root, lb.root));
  return compact(out);
}

LieVector ChevalleyBasis::bracket(const LieVector& x, const LieVector& y) const {
  LieVector out;
  for (auto [i, ci] : x) {
    for (auto [j, cj] : y) {
      for (auto [k, ck] : bracket(i, j)) add_term(out, k, ci * cj * ck);
    }
  }
  return compact(out);
}

BasisIntegrity ChevalleyBasis::check_integrity() const {
  const RootSystem& R = *rs_;
  const std::size_t n = R.size();
  BasisIntegrity rep;
  auto note = [&](const std::string& msg) {
    if (rep.first_failure.empty()) rep.first_failure = msg;
  };
  for (RootId a = 0; a < n; ++a) {
    for (RootId b = 0; b < n; ++b) {
      if (!root_sum(a, b)) continue;
      ++rep.pairs_checked;
      int nab = structure_constant(a, b);
      std::string tag = "(" + R.name(a) + ", " + R.name(b) + ")";
      if (nab != -structure_constant(b, a)) {
        rep.antisymmetric = false;
        note("antisymmetry fails at " + tag);
      }
      if (structure_constant(R.negate(a), R.negate(b)) != -nab) {
        rep.negation_rule = false;
        note("N_{-a,-b} != -N_{a,b} at " + tag);
      }
      int p = 0;
      RootCoords cur = R.coords(b);
      while (true) {
        for (std::size_t i = 0; i < cur.size(); ++i) cur[i] -= R.coords(a)[i];
        if (!R.find(cur)) break;
        ++p;
      }
      if (std::abs(nab) != p + 1) {
        rep.string_lengths = false;
        note("|N| != p+1 at " + tag);
      }
    }
  }
  const std::size_t d = dim();
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      LieVector xy = bracket(x, y);
      for (std::size_t z = 0; z < d; ++z) {
        ++rep.triples_checked;
        LieVector sum;
        for (auto [k, c] : bracket(LieVector{{x, 1}}, bracket(y, z))) add_term(sum, k, c);
        for (auto [k, c] : bracket(LieVector{{y, 1}}, bracket(z, x))) add_term(sum, k, c);
        for (auto [k, c] : bracket(LieVector{{z, 1}}, xy)) add_term(sum, k, c);
        if (!compact(sum).empty()) {
          rep.jacobi = false;
          note("Jacobi fails on basis triple (" + std::to_string(x) + "," + std::to_string(y) + "," +
               std::to_string(z) + ")");
        }
      }
    }
  }
  return rep;
}

void ChevalleyBasis::compute_divided_powers() {
  const RootSystem& R = *rs_;
  const std::size_t d = dim();
  divided_powers_.resize(R.size());
  designated_.resize(R.size());
  for (RootId r = 0; r < R.size(); ++r) {
    const std::size_t er = root_pos_[r];
    IntMatrix ad(d);
    for (std::size_t col = 0; col < d; ++col) {
      for (auto [row, c] : bracket(er, col)) ad(row, col) = c;
    }
    auto& powers = divided_powers_[r];
    powers.push_back(ad);
    for (long k = 2;; ++k) {
      const IntMatrix& prev = powers.back();
      IntMatrix next(d);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t m = 0; m < d; ++m) {
          long a = prev(i, m);
          if (a == 0) continue;
          for (std::size_t j = 0; j < d; ++j) next(i, j) += a * ad(m, j);
        }
      }
      if (next.is_zero()) break;
      for (auto& v : next.data) {
        if (v % k != 0) throw std::logic_error("divided power of ad e_alpha is not integral");
        v /= k;
      }
      powers.push_back(std::move(next));
      if (k > 6) throw std::logic_error("ad e_alpha is not nilpotent of expected degree");
    }
    // First-order entry: ad e_α(h_i) = -⟨α,α_i⟩ e_α, untouched by higher
    // divided powers. Prefer a unit coefficient.
    std::size_t best = 0;
    int best_abs = 0;
    for (int i = 1; i <= R.rank(); ++i) {
      int c = std::abs(R.pair(r, R.simple(i)));
      if (c != 0 && (best_abs == 0 || c < best_abs)) {
        best_abs = c;
        best = cartan_pos_[static_cast<std::size_t>(i - 1)];
      }
    }
    designated_[r] = {er, best};
  }
}

GroupElement ChevalleyBasis::identity() const { return GroupElement(QMatrix::identity(dim()), GroupWord{}); }

GroupElement ChevalleyBasis::x(RootId alpha, const Rational& lambda) const {
  if (alpha >= rs_->size()) throw std::out_of_range("x: not a root");
  const std::size_t d = dim();
  QMatrix mat = QMatrix::identity(d);
  if (sgn(lambda) != 0) {
    Rational lk = 1;
    for (const IntMatrix& dp : divided_powers_[alpha]) {
      lk *= lambda;
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          if (long c = dp(i, j); c != 0) mat(i, j) += lk * c;
        }
      }
    }
  }
  return GroupElement(std::move(mat), GroupWord{Letter{Letter::Kind::X, alpha, lambda}});
}

GroupElement ChevalleyBasis::m(RootId alpha, const Rational& lambda) const {
  if (sgn(lambda) == 0) throw std::invalid_argument("m_alpha(0) is undefined");
  Rational inv = -1 / lambda;
  GroupElement out = x(alpha, lambda) * x(rs_->negate(alpha), inv) * x(alpha, lambda);
  return GroupElement(out.matrix(), GroupWord{Letter{Letter::Kind::M, alpha, lambda}});
}

GroupElement ChevalleyBasis::h(RootId alpha, const Rational& lambda) const {
  if (sgn(lambda) == 0) throw std::invalid_argument("h_alpha(0) is undefined");
  // m_α(1)⁻¹ = m_α(-1).
  GroupElement out = m(alpha, lambda) * m(alpha, Rational(-1));
  return GroupElement(out.matrix(), GroupWord{Letter{Letter::Kind::H, alpha, lambda}});
}

GroupElement ChevalleyBasis::evaluate(const Letter& letter) const {
  switch (letter.kind) {
    case Letter::Kind::X: return x(letter.root, letter.scalar);
    case Letter::Kind::M: return m(letter.root, letter.scalar);
    default: return h(letter.root, letter.scalar);
  }
}

GroupElement ChevalleyBasis::evaluate(const GroupWord& word) const {
  GroupElement out = identity();
  for (const Letter& l : word) out = out * evaluate(l);
  return out;
}

GroupElement ChevalleyBasis::lift_word(const WeylWord& word) const {
  GroupElement out = identity();
  for (int i : word) out = out * m(rs_->simple(i), Rational(1));
  return out;
}

std::optional<Rational> ChevalleyBasis::recover_parameter(RootId alpha, const GroupElement& g) const {
  if (g.dim() != dim()) return std::nullopt;
  auto [row, col] = designated_.at(alpha);
  long coeff = divided_powers_[alpha].front()(row, col);
  Rational lambda = g.matrix()(row, col) / Rational(coeff);
  if (x(alpha, lambda) != g) return std::nullopt;
  return lambda;
}

bool ChevalleyBasis::is_upper_unitriangular(const GroupElement& g) const {
  const QMatrix& a = g.matrix();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (a(i, i) != 1) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (sgn(a(i, j)) != 0) return false;
    }
  }
  return true;
}

}  // namespace chev
