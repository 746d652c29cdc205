#pragma once

// Independent reference computations used to cross-check the library.
// Nothing here calls into the code under test except for plain data types.

#include "chev/matrix.hpp"

#include <gmpxx.h>

#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using Coords = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

// Cartan matrices a_ij = 2(α_i,α_j)/(α_j,α_j), Bourbaki numbering, written out by hand.
inline IntMatrix cartan(char type, int rank) {
  auto key = std::string(1, type) + std::to_string(rank);
  static const std::map<std::string, IntMatrix> table = {
      {"A1", {{2}}},
      {"A2", {{2, -1}, {-1, 2}}},
      {"A3", {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}},
      {"B2", {{2, -2}, {-1, 2}}},
      {"B3", {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}},
      {"C2", {{2, -1}, {-2, 2}}},
      {"C3", {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}},
      {"D4", {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}},
      {"G2", {{2, -1}, {-3, 2}}},
      {"F4", {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}},
  };
  auto it = table.find(key);
  if (it == table.end()) throw std::invalid_argument("no oracle Cartan matrix for " + key);
  return it->second;
}

// Closure of the simple roots under s_i(v) = v - (Σ_j v_j a_ji) e_i.
inline std::set<Coords> root_closure(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::set<Coords> roots;
  std::vector<Coords> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    Coords e(n, 0);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    Coords v = frontier.back();
    frontier.pop_back();
    for (std::size_t i = 0; i < n; ++i) {
      int pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing += v[j] * a[j][i];
      Coords w = v;
      w[i] -= pairing;
      if (roots.insert(w).second) frontier.push_back(w);
    }
  }
  return roots;
}

// All (i, j) with 1 <= i, j <= 4 and iα + jβ a root, ordered by i+j then i.
inline std::vector<std::pair<int, int>> interval_grid(const std::set<Coords>& roots, const Coords& a,
                                                      const Coords& b) {
  std::vector<std::pair<int, int>> out;
  for (int s = 2; s <= 8; ++s) {
    for (int i = 1; i <= 4; ++i) {
      int j = s - i;
      if (j < 1 || j > 4) continue;
      Coords c(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) c[k] = i * a[k] + j * b[k];
      if (roots.count(c)) out.emplace_back(i, j);
    }
  }
  return out;
}

inline unsigned long totient(unsigned long n) {
  unsigned long count = 0;
  for (unsigned long k = 1; k <= n; ++k) count += std::gcd(k, n) == 1 ? 1 : 0;
  return count;
}

// lcm{n : φ(n) <= d} by brute force over n <= 4d² + 10.
inline mpz_class exponent_bound(unsigned long d) {
  mpz_class l = 1;
  for (unsigned long n = 1; n <= 4 * d * d + 10; ++n) {
    if (totient(n) <= d) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), n);
  }
  return l;
}

// Least r <= bound with g^r = I by repeated multiplication.
inline std::optional<unsigned long> naive_order(const chev::QMatrix& g, unsigned long bound) {
  chev::QMatrix power = g;
  for (unsigned long r = 1; r <= bound; ++r) {
    if (power.is_identity()) return r;
    power = power * g;
  }
  return std::nullopt;
}

// ν_p by repeated division.
inline std::optional<long> valuation(long p, const mpq_class& x) {
  if (x == 0) return std::nullopt;
  mpz_class num = x.get_num();
  mpz_class den = x.get_den();
  long v = 0;
  while (num % p == 0) {
    num /= p;
    ++v;
  }
  while (den % p == 0) {
    den /= p;
    --v;
  }
  return v;
}

// Modular inverse by search.
inline long inverse_mod(long a, long q) {
  a = ((a % q) + q) % q;
  for (long x = 1; x < q; ++x) {
    if (a * x % q == 1) return x;
  }
  throw std::invalid_argument("not invertible");
}

// Rank of a rational matrix by elimination.
inline std::size_t rank(chev::QMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(pivot, k));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      mpq_class f = m(i, c) / m(r, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
    }
    ++r;
  }
  return r;
}

}  // namespace oracle
