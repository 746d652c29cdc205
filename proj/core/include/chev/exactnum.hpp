#pragma once

// Exact scalars: GMP rationals, the extended integers Z ∪ {∞}, and the
// p-adic valuation together with the subring Z[1/p].

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>

namespace chev {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical num/den (gcd 1, positive denominator). Throws on den == 0.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

/// Parses "a", "-a/b" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& x);

bool is_prime(long n);
Integer ipow(const Integer& base, unsigned long exponent);
Rational qpow(const Rational& base, long exponent);

/// Element of Z ∪ {∞}; ∞ compares above every integer and absorbs addition.
class ExtInt {
 public:
  constexpr ExtInt(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  static constexpr ExtInt infinity() { return ExtInt(); }

  constexpr bool is_infinite() const { return !value_.has_value(); }
  long value() const;  // throws std::logic_error on ∞

  friend constexpr bool operator==(const ExtInt& a, const ExtInt& b) = default;
  friend constexpr std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    }
    return *a.value_ <=> *b.value_;
  }
  friend constexpr ExtInt operator+(const ExtInt& a, const ExtInt& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return ExtInt(*a.value_ + *b.value_);
  }

  std::string to_string() const;

 private:
  constexpr ExtInt() = default;
  std::optional<long> value_;
};

inline ExtInt min(const ExtInt& a, const ExtInt& b) { return b < a ? b : a; }

/// The p-adic valuation ν_p on Q.
class Valuation {
 public:
  /// Throws std::invalid_argument unless prime is a positive prime.
  explicit Valuation(long prime);

  long prime() const { return prime_; }

  ExtInt operator()(const Rational& x) const;
  ExtInt operator()(const Integer& x) const;

  /// True iff the denominator of x is a power of p.
  bool in_z_inv_p(const Rational& x) const;

  /// Image of x ∈ Z[1/p] in Z/qZ, as a residue in [0, q).
  /// Throws std::invalid_argument if x ∉ Z[1/p], q < 2 or gcd(q, p) != 1.
  Integer reduce_mod(const Rational& x, const Integer& q) const;
  long reduce_mod(const Rational& x, long q) const;

  /// x ≡ 0 in Z[1/p]/mZ[1/p]; m coprime to p, x ∈ Z[1/p].
  bool divisible_by(const Rational& x, const Integer& m) const;

 private:
  long prime_;
};

/// Result of sampling the valuation properties on pairs (λ, μ).
struct ValuationAxiomReport {
  bool pass = true;
  std::size_t pairs_checked = 0;
  std::string failed_axiom;  // "V1", "V2", "V3" or "V4" when !pass
  std::optional<std::pair<Rational, Rational>> counterexample;
};

/// V1 multiplicativity, V2 in its ultrametric min form, V3 on the
/// numerators and denominators of the samples, V4 sign invariance.
/// Throws std::invalid_argument on an empty sample list.
ValuationAxiomReport check_valuation_axioms(const Valuation& v,
                                            std::span<const std::pair<Rational, Rational>> samples);

}  // namespace chev
