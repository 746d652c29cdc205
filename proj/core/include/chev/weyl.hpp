#pragma once

#include "chev/matrix.hpp"
#include "chev/rootsys.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace chev {

/// Word in simple reflections, indices 1..rank.
using WeylWord = std::vector<int>;

std::string to_string(const WeylWord& word);
/// Parses "1,2,1"; the empty string is the empty word.
WeylWord parse_word(const std::string& text);

/// Element of W acting on simple-root coordinates, together with a word
/// whose product of reflection matrices equals the matrix.
class WeylElement {
 public:
  WeylElement(QMatrix matrix, WeylWord word) : matrix_(std::move(matrix)), word_(std::move(word)) {}

  const QMatrix& matrix() const { return matrix_; }
  const WeylWord& word() const { return word_; }
  std::size_t rank() const { return matrix_.rows(); }

  QVector operator()(const QVector& v) const { return matrix_ * v; }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix_ == b.matrix_; }

 private:
  QMatrix matrix_;
  WeylWord word_;
};

WeylElement identity_element(const RootSystem& rs);
/// Throws std::out_of_range unless 1 <= i <= rank.
WeylElement simple_reflection(const RootSystem& rs, int i);
WeylElement element_from_word(const RootSystem& rs, const WeylWord& word);
WeylElement compose(const WeylElement& a, const WeylElement& b);
WeylElement power(const WeylElement& w, unsigned long k);
RootId apply(const RootSystem& rs, const WeylElement& w, RootId r);

/// Least m >= 1 with w^m = 1. Throws std::runtime_error past `bound`.
unsigned long order(const WeylElement& w, unsigned long long bound = 696729600ULL);

Rational det_minus_identity(const WeylElement& w);
bool has_eigenvalue_one(const WeylElement& w);

/// Σ_{i=1}^{m} w^i(v) with m = order(w).
QVector orbit_sum(const WeylElement& w, const QVector& v);

/// s_1 s_2 ... s_rank.
WeylElement coxeter_element(const RootSystem& rs);

/// True iff w^T G w = G for the Gram matrix G.
bool preserves_form(const RootSystem& rs, const WeylElement& w);

/// All of W by closure under right multiplication by simple reflections in
/// breadth-first order, so each word is of minimal length. Throws
/// std::length_error when |W| exceeds max_size.
std::vector<WeylElement> enumerate(const RootSystem& rs, std::size_t max_size);

/// Coxeter matrix entry m_ij, the order of s_i s_j.
int coxeter_matrix_entry(const RootSystem& rs, int i, int j);

}  // namespace chev
