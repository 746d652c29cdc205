#include "chev/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace chev {

QVector operator+(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

QVector operator-(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

QVector operator*(const Rational& s, const QVector& v) {
  QVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

bool is_zero(const QVector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

std::string to_string(const QVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + ")";
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

QMatrix& QMatrix::operator+=(const QMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (sgn(other.data_[i]) != 0) data_[i] += other.data_[i];
  }
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (sgn(other.data_[i]) != 0) data_[i] -= other.data_[i];
  }
  return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  QMatrix out(a.rows_, b.cols_);
  Rational term;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        mpq_mul(term.get_mpq_t(), aik.get_mpq_t(), bkj.get_mpq_t());
        out(i, j) += term;
      }
    }
  }
  return out;
}

QMatrix operator*(const Rational& s, QMatrix a) {
  for (auto& x : a.data_) {
    if (sgn(x) != 0) x *= s;
  }
  return a;
}

QVector QMatrix::operator*(const QVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
  QVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn((*this)(i, j)) != 0 && sgn(v[j]) != 0) out[i] += (*this)(i, j) * v[j];
    }
  }
  return out;
}

bool QMatrix::is_identity() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

std::size_t QMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& x : data_) n += sgn(x) != 0 ? 1 : 0;
  return n;
}

QMatrix QMatrix::transpose() const {
  QMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

QMatrix QMatrix::pow(const Integer& exponent) const {
  if (!square()) throw std::invalid_argument("power of a non-square matrix");
  if (exponent < 0) throw std::invalid_argument("negative matrix power");
  QMatrix result = identity(rows_);
  QMatrix base = *this;
  auto bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t bit = 0; bit < bits; ++bit) {
    if (mpz_tstbit(exponent.get_mpz_t(), bit)) result = result * base;
    if (bit + 1 < bits) base = base * base;
  }
  return result;
}

Rational QMatrix::determinant() const {
  if (!square()) throw std::invalid_argument("determinant of a non-square matrix");
  QMatrix work = *this;
  Rational det = 1;
  const std::size_t n = rows_;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(work(pivot, col)) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(work(pivot, j), work(col, j));
      det = -det;
    }
    det *= work(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(work(r, col)) == 0) continue;
      Rational f = work(r, col) / work(col, col);
      for (std::size_t j = col; j < n; ++j) {
        if (sgn(work(col, j)) != 0) work(r, j) -= f * work(col, j);
      }
    }
  }
  return det;
}

std::optional<QMatrix> QMatrix::inverse() const {
  if (!square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = rows_;
  QMatrix work = *this;
  QMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(work(pivot, col)) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    Rational scale = 1 / work(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(work(col, j)) != 0) work(col, j) *= scale;
      if (sgn(inv(col, j)) != 0) inv(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(work(r, col)) == 0) continue;
      Rational f = work(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(work(col, j)) != 0) work(r, j) -= f * work(col, j);
        if (sgn(inv(col, j)) != 0) inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "\n[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
    os << "]";
  }
  return os.str();
}

}  // namespace chev
