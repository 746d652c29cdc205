#include "chev/weyl.hpp"

#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace chev {

std::string to_string(const WeylWord& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(word[i]);
  }
  return out;
}

WeylWord parse_word(const std::string& text) {
  WeylWord word;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad word entry '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("bad word entry '" + item + "'");
    word.push_back(v);
  }
  return word;
}

WeylElement identity_element(const RootSystem& rs) {
  return WeylElement(QMatrix::identity(static_cast<std::size_t>(rs.rank())), {});
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank()) throw std::out_of_range("simple reflection index out of range");
  const auto n = static_cast<std::size_t>(rs.rank());
  const auto col_i = static_cast<std::size_t>(i - 1);
  QMatrix m = QMatrix::identity(n);
  // Column j is s_i(α_j) = α_j - ⟨α_j, α_i⟩ α_i.
  for (std::size_t j = 0; j < n; ++j) m(col_i, j) -= rs.cartan()[j][col_i];
  return WeylElement(std::move(m), {i});
}

WeylElement element_from_word(const RootSystem& rs, const WeylWord& word) {
  WeylElement w = identity_element(rs);
  for (int i : word) w = compose(w, simple_reflection(rs, i));
  return w;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  WeylWord word = a.word();
  word.insert(word.end(), b.word().begin(), b.word().end());
  return WeylElement(a.matrix() * b.matrix(), std::move(word));
}

WeylElement power(const WeylElement& w, unsigned long k) {
  WeylWord word;
  for (unsigned long i = 0; i < k; ++i) word.insert(word.end(), w.word().begin(), w.word().end());
  return WeylElement(w.matrix().pow(k), std::move(word));
}

RootId apply(const RootSystem& rs, const WeylElement& w, RootId r) {
  QVector v = w(rs.vector(r));
  RootCoords c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = static_cast<int>(v[i].get_num().get_si());
  auto found = rs.find(c);
  if (!found) throw std::logic_error("Weyl element does not permute the roots");
  return *found;
}

unsigned long order(const WeylElement& w, unsigned long long bound) {
  QMatrix p = w.matrix();
  unsigned long m = 1;
  while (!p.is_identity()) {
    if (m >= bound) throw std::runtime_error("Weyl element order exceeds the group order bound");
    p = p * w.matrix();
    ++m;
  }
  return m;
}

Rational det_minus_identity(const WeylElement& w) {
  return (w.matrix() - QMatrix::identity(w.rank())).determinant();
}

bool has_eigenvalue_one(const WeylElement& w) { return sgn(det_minus_identity(w)) == 0; }

QVector orbit_sum(const WeylElement& w, const QVector& v) {
  unsigned long m = order(w);
  QVector sum(v.size());
  QVector cur = v;
  for (unsigned long i = 1; i <= m; ++i) {
    cur = w(cur);
    sum = sum + cur;
  }
  return sum;
}

WeylElement coxeter_element(const RootSystem& rs) {
  WeylWord word;
  for (int i = 1; i <= rs.rank(); ++i) word.push_back(i);
  return element_from_word(rs, word);
}

bool preserves_form(const RootSystem& rs, const WeylElement& w) {
  return w.matrix().transpose() * rs.gram() * w.matrix() == rs.gram();
}

std::vector<WeylElement> enumerate(const RootSystem& rs, std::size_t max_size) {
  if (rs.weyl_order() > max_size) {
    throw std::length_error("|W(" + rs.label() + ")| = " + std::to_string(rs.weyl_order()) +
                            " exceeds the limit " + std::to_string(max_size));
  }
  std::vector<WeylElement> gens;
  for (int i = 1; i <= rs.rank(); ++i) gens.push_back(simple_reflection(rs, i));

  std::vector<WeylElement> out{identity_element(rs)};
  std::map<std::vector<std::string>, std::size_t> seen;
  auto key = [](const QMatrix& m) {
    std::vector<std::string> k;
    k.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) k.push_back(m(i, j).get_str());
    }
    return k;
  };
  seen[key(out.front().matrix())] = 0;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& s : gens) {
      WeylElement next = compose(out[head], s);
      if (seen.emplace(key(next.matrix()), out.size()).second) out.push_back(std::move(next));
    }
  }
  if (out.size() != rs.weyl_order()) throw std::logic_error("Weyl group closure size mismatch");
  return out;
}

int coxeter_matrix_entry(const RootSystem& rs, int i, int j) {
  if (i == j) return 1;
  int prod = rs.cartan()[i - 1][j - 1] * rs.cartan()[j - 1][i - 1];
  switch (prod) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: throw std::logic_error("non-crystallographic Cartan product");
  }
}

}  // namespace chev
