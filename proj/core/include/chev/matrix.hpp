#pragma once

#include "chev/exactnum.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace chev {

using QVector = std::vector<Rational>;

QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector operator*(const Rational& s, const QVector& v);
bool is_zero(const QVector& v);
std::string to_string(const QVector& v);

/// Dense exact-rational matrix, row-major. Multiplication skips zero
/// entries, which keeps products of the sparse generator matrices cheap.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QMatrix& operator+=(const QMatrix& other);
  QMatrix& operator-=(const QMatrix& other);
  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const Rational& s, QMatrix a);
  QVector operator*(const QVector& v) const;

  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

  bool is_identity() const;
  bool is_zero() const;
  std::size_t nonzeros() const;
  QMatrix transpose() const;

  /// Nonnegative power by square-and-multiply.
  QMatrix pow(const Integer& exponent) const;
  QMatrix pow(unsigned long exponent) const { return pow(Integer(exponent)); }

  Rational determinant() const;
  std::optional<QMatrix> inverse() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace chev
