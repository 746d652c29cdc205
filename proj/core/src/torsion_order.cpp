#include "chev/torsion_order.hpp"

#include <array>
#include <optional>
#include <stdexcept>

namespace chev {

namespace {

// Primes just below 2^31: products of two residues fit in 64 bits.
constexpr std::array<std::uint64_t, 8> kReductionPrimes = {
    2147483647ULL, 2147483629ULL, 2147483587ULL, 2147483579ULL,
    2147483563ULL, 2147483549ULL, 2147483543ULL, 2147483497ULL};
constexpr std::size_t kPrimesUsed = 3;

unsigned long totient(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

class ModMatrix {
 public:
  ModMatrix(std::size_t n, std::uint64_t mod) : n_(n), mod_(mod), data_(n * n, 0) {}

  static ModMatrix identity(std::size_t n, std::uint64_t mod) {
    ModMatrix m(n, mod);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::uint64_t& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  ModMatrix operator*(const ModMatrix& b) const {
    ModMatrix out(n_, mod_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t k = 0; k < n_; ++k) {
        std::uint64_t a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) {
          std::uint64_t v = b(k, j);
          if (v != 0) out(i, j) = (out(i, j) + a * v % mod_) % mod_;
        }
      }
    }
    return out;
  }

  ModMatrix pow(const Integer& e) const {
    ModMatrix result = identity(n_, mod_);
    ModMatrix base = *this;
    auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t bit = 0; bit < bits; ++bit) {
      if (mpz_tstbit(e.get_mpz_t(), bit)) result = result * base;
      if (bit + 1 < bits) base = base * base;
    }
    return result;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if ((*this)(i, j) != (i == j ? 1U : 0U)) return false;
      }
    }
    return true;
  }

  // First entry differing from the identity, as "(i,j)".
  std::string first_difference() const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if ((*this)(i, j) != (i == j ? 1U : 0U)) return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    }
    return "";
  }

 private:
  std::size_t n_;
  std::uint64_t mod_;
  std::vector<std::uint64_t> data_;
};

std::optional<ModMatrix> reduce(const QMatrix& g, std::uint64_t prime) {
  Integer ell(static_cast<unsigned long>(prime));
  ModMatrix out(g.rows(), prime);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      const Rational& x = g(i, j);
      if (sgn(x) == 0) continue;
      Integer den = x.get_den() % ell;
      if (den == 0) return std::nullopt;
      Integer inv;
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), ell.get_mpz_t());
      Integer v = x.get_num() * inv;
      mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), ell.get_mpz_t());
      out(i, j) = v.get_ui();
    }
  }
  return out;
}

}  // namespace

Integer torsion_exponent_bound(std::size_t d) {
  // φ(n) >= sqrt(n/2), so every n with φ(n) <= d satisfies n <= 2d².
  Integer l = 1;
  const unsigned long limit = 2UL * d * d + 2;
  for (unsigned long n = 1; n <= limit; ++n) {
    if (totient(n) <= d) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), n);
  }
  return l;
}

std::vector<unsigned long> torsion_exponent_primes(std::size_t d) {
  Integer l = torsion_exponent_bound(d);
  std::vector<unsigned long> primes;
  for (unsigned long p = 2; p <= d + 1; ++p) {
    bool prime = true;
    for (unsigned long q = 2; q * q <= p; ++q) prime = prime && p % q != 0;
    if (prime && mpz_divisible_ui_p(l.get_mpz_t(), p)) primes.push_back(p);
  }
  return primes;
}

bool power_is_identity_mod(const QMatrix& g, const Integer& exponent, std::uint64_t prime) {
  auto r = reduce(g, prime);
  if (!r) throw std::invalid_argument("reduction prime divides a denominator");
  return r->pow(exponent).is_identity();
}

TorsionOrder torsion_order(const QMatrix& g) {
  if (!g.square()) throw std::invalid_argument("torsion_order needs a square matrix");
  const std::size_t d = g.rows();
  TorsionOrder out;
  out.bound = torsion_exponent_bound(d);
  const std::vector<unsigned long> factors = torsion_exponent_primes(d);

  std::optional<Integer> candidate;
  std::size_t used = 0;
  bool singularity_checked = false;
  for (std::uint64_t ell : kReductionPrimes) {
    if (used == kPrimesUsed) break;
    auto red = reduce(g, ell);
    if (!red) continue;
    ++used;
    ModMatrix big = red->pow(out.bound);
    if (!big.is_identity()) {
      if (!singularity_checked && sgn(g.determinant()) == 0) throw std::invalid_argument("singular matrix");
      out.finite = false;
      out.prime = ell;
      out.certificate = "g^L(d) mod " + std::to_string(ell) + " differs from I at " + big.first_difference();
      return out;
    }
    // g is invertible mod ℓ, hence over Q.
    singularity_checked = true;
    Integer r = out.bound;
    for (unsigned long q : factors) {
      while (mpz_divisible_ui_p(r.get_mpz_t(), q)) {
        Integer smaller = r / q;
        if (!red->pow(smaller).is_identity()) break;
        r = smaller;
      }
    }
    if (candidate && *candidate != r) {
      out.finite = false;
      out.prime = ell;
      out.certificate = "orders modulo " + std::to_string(out.prime) + " disagree (" + candidate->get_str() +
                        " vs " + r.get_str() + ")";
      return out;
    }
    candidate = r;
    out.prime = ell;
  }
  if (!candidate) throw std::invalid_argument("no usable reduction prime for matrix");
  if (g.pow(*candidate).is_identity()) {
    out.finite = true;
    out.order = *candidate;
    out.certificate = "g^" + candidate->get_str() + " = I exactly";
  } else {
    out.finite = false;
    out.certificate = "g^" + candidate->get_str() + " != I exactly although it is I modulo " +
                      std::to_string(out.prime);
  }
  return out;
}

}  // namespace chev
