#include "chev/exactnum.hpp"

#include <stdexcept>

namespace chev {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
}

std::string to_string(const Rational& x) { return x.get_str(); }

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational qpow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("negative power of zero");
    Rational inv = 1 / base;
    return qpow(inv, -exponent);
  }
  auto e = static_cast<unsigned long>(exponent);
  Rational out(ipow(base.get_num(), e), ipow(base.get_den(), e));
  return out;  // already canonical: gcd of powers of coprime integers is 1
}

long ExtInt::value() const {
  if (!value_) throw std::logic_error("value() of infinite ExtInt");
  return *value_;
}

std::string ExtInt::to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

Valuation::Valuation(long prime) : prime_(prime) {
  if (!is_prime(prime)) throw std::invalid_argument("valuation needs a prime, got " + std::to_string(prime));
}

ExtInt Valuation::operator()(const Integer& x) const {
  if (x == 0) return ExtInt::infinity();
  Integer p(prime_);
  Integer rest(x);
  // mpz_remove strips every factor p and reports how many.
  auto k = static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
  return ExtInt(k);
}

ExtInt Valuation::operator()(const Rational& x) const {
  if (x == 0) return ExtInt::infinity();
  return ExtInt((*this)(x.get_num()).value() - (*this)(x.get_den()).value());
}

bool Valuation::in_z_inv_p(const Rational& x) const {
  Integer rest;
  Integer p(prime_);
  mpz_remove(rest.get_mpz_t(), x.get_den().get_mpz_t(), p.get_mpz_t());
  return rest == 1;
}

Integer Valuation::reduce_mod(const Rational& x, const Integer& q) const {
  if (q < 2) throw std::invalid_argument("modulus must exceed 1");
  Integer g;
  Integer p(prime_);
  mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  if (g != 1) throw std::invalid_argument("modulus must be coprime to p");
  if (!in_z_inv_p(x)) throw std::invalid_argument("element " + x.get_str() + " is not in Z[1/p]");
  Integer inv;
  mpz_invert(inv.get_mpz_t(), x.get_den().get_mpz_t(), q.get_mpz_t());
  Integer out = x.get_num() * inv;
  mpz_fdiv_r(out.get_mpz_t(), out.get_mpz_t(), q.get_mpz_t());
  return out;
}

long Valuation::reduce_mod(const Rational& x, long q) const {
  return reduce_mod(x, Integer(q)).get_si();
}

bool Valuation::divisible_by(const Rational& x, const Integer& m) const {
  if (!in_z_inv_p(x)) throw std::invalid_argument("element " + x.get_str() + " is not in Z[1/p]");
  // The denominator is a unit modulo m, so only the numerator matters.
  return mpz_divisible_p(x.get_num().get_mpz_t(), m.get_mpz_t()) != 0;
}

ValuationAxiomReport check_valuation_axioms(const Valuation& v,
                                            std::span<const std::pair<Rational, Rational>> samples) {
  if (samples.empty()) throw std::invalid_argument("check_valuation_axioms needs samples");
  ValuationAxiomReport report;
  auto fail = [&](const char* axiom, const std::pair<Rational, Rational>& s) {
    report.pass = false;
    report.failed_axiom = axiom;
    report.counterexample = s;
  };
  for (const auto& s : samples) {
    const auto& [a, b] = s;
    ++report.pairs_checked;
    ExtInt va = v(a);
    ExtInt vb = v(b);
    if (v(Rational(a * b)) != va + vb) {
      fail("V1", s);
      break;
    }
    ExtInt vs = v(Rational(a + b));
    if (vs < min(va, vb) || (va != vb && vs != min(va, vb))) {
      fail("V2", s);
      break;
    }
    bool v3 = v(a.get_num()) >= 0 && v(a.get_den()) >= 0 && v(b.get_num()) >= 0 && v(b.get_den()) >= 0;
    if (!v3) {
      fail("V3", s);
      break;
    }
    if (v(Rational(-a)) != va || v(Rational(-b)) != vb) {
      fail("V4", s);
      break;
    }
  }
  return report;
}

}  // namespace chev
