#include "chev/congruence.hpp"

#include "chev/sampling.hpp"

#include <numeric>
#include <stdexcept>

namespace chev {

namespace {

bool matrix_in_z_inv_p(const Valuation& v, const QMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!v.in_z_inv_p(a(i, j))) return false;
    }
  }
  return true;
}

bool provenance_over_z_inv_p(const Valuation& v, const GroupElement& g) {
  if (!g.word()) return false;
  for (const Letter& l : *g.word()) {
    if (!v.in_z_inv_p(l.scalar)) return false;
    if (l.kind != Letter::Kind::X && (sgn(l.scalar) == 0 || !v.in_z_inv_p(Rational(1 / l.scalar)))) return false;
  }
  return true;
}

// Every entry of a divisible by m in Z[1/p].
bool matrix_divisible(const Valuation& v, const QMatrix& a, const Integer& m) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!v.divisible_by(a(i, j), m)) return false;
    }
  }
  return true;
}

QMatrix identity_matrix(std::size_t n) {
  QMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

Integer binomial(long n, long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

CongruenceContext::CongruenceContext(const ChevalleyBasis& cb, long p, long q, bool allow_small_modulus)
    : cb_(&cb), v_(p), q_(q) {
  long lower = allow_small_modulus ? 2 : 3;
  if (q < lower) throw std::invalid_argument("modulus q must be at least " + std::to_string(lower));
  if (std::gcd(q, p) != 1) throw std::invalid_argument("modulus q must be prime to p");
}

bool in_gamma(const CongruenceContext& ctx, const GroupElement& g) {
  const Valuation& v = ctx.valuation();
  if (!matrix_in_z_inv_p(v, g.matrix())) return false;
  return provenance_over_z_inv_p(v, g) || g.matrix().determinant() == 1;
}

bool in_gamma_q(const CongruenceContext& ctx, const GroupElement& g) {
  if (!in_gamma(ctx, g)) return false;
  const QMatrix& a = g.matrix();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (ctx.valuation().reduce_mod(a(i, j), ctx.q()) != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

ProbeReport torsionfree_probe(const CongruenceContext& ctx, std::size_t word_count, std::size_t max_word_len,
                              std::uint64_t seed) {
  const ChevalleyBasis& cb = ctx.basis();
  const RootSystem& R = cb.roots();
  SampleRng rng(seed);
  ProbeReport out;
  out.seed = seed;
  for (std::size_t w = 0; w < word_count; ++w) {
    ++out.words;
    auto len = static_cast<std::size_t>(rng.range(1, static_cast<long>(std::max<std::size_t>(max_word_len, 1))));
    GroupWord word;
    for (std::size_t k = 0; k < len; ++k) {
      RootId alpha = rng.below(R.size());
      word.push_back({Letter::Kind::X, alpha, Rational(ctx.q() * rng.z_inv_p(ctx.p()))});
    }
    GroupElement g = cb.evaluate(word);
    if (g.is_identity()) {
      ++out.identity_skipped;
      continue;
    }
    TorsionOrder t = torsion_order(g.matrix());
    if (t.finite) {
      ++out.torsion_found;
      if (!out.violating_word) {
        out.violating_word = word;
        out.violating_order = t.order;
      }
    } else {
      ++out.certified_infinite;
    }
  }
  return out;
}

std::string to_string(ObstructionBranch b) {
  switch (b) {
    case ObstructionBranch::NotDivisible:
      return "q-does-not-divide-r";
    case ObstructionBranch::BinomialOddPrime:
      return "binomial-odd-prime";
    case ObstructionBranch::Inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

ObstructionReport binomial_obstruction(const CongruenceContext& ctx, const GroupElement& g, long r) {
  if (!is_prime(r)) throw std::invalid_argument("r must be prime");
  if (g.is_identity()) throw std::invalid_argument("g must differ from the identity");
  if (!in_gamma_q(ctx, g)) throw std::invalid_argument("g is not in the congruence subgroup");
  const Valuation& v = ctx.valuation();
  const Integer q = ctx.q();
  const std::size_t d = g.dim();
  const QMatrix I = identity_matrix(d);
  QMatrix B = g.matrix();
  B -= I;

  ObstructionReport out;
  out.r = r;
  Integer qs = q;
  out.s = 1;
  while (matrix_divisible(v, B, Integer(qs * q))) {
    qs *= q;
    ++out.s;
  }
  const Integer qs1 = qs * q;
  const Integer qs2 = qs1 * q;

  // (I + B)^r = I + rB + CB² with C = Σ_{i=2}^{r} C(r,i) B^{i-2}.
  QMatrix C(d, d);
  QMatrix Bpow = I;
  for (long i = 2; i <= r; ++i) {
    C += Rational(binomial(r, i)) * Bpow;
    Bpow = Bpow * B;
  }
  QMatrix rB = Rational(r) * B;
  QMatrix CB2 = C * (B * B);
  if (!matrix_divisible(v, CB2, qs1)) {
    throw std::logic_error("CB^2 is not divisible by q^(s+1)");
  }
  if (!matrix_divisible(v, rB, qs1)) {
    out.branch = ObstructionBranch::NotDivisible;
    out.certified = true;
    out.detail = "rB != 0 mod q^" + std::to_string(out.s + 1) + " but CB^2 = 0 mod q^" + std::to_string(out.s + 1) +
                 ", so rB + CB^2 != 0";
    return out;
  }
  if (r == ctx.q() && r % 2 == 1) {
    QMatrix rhs(d, d);
    QMatrix Bi = B;
    for (long i = 2; i <= r; ++i) {
      Bi = Bi * B;
      rhs += Rational(binomial(r, i)) * Bi;
    }
    QMatrix lhs = Rational(-r) * B;
    bool rhs_zero = matrix_divisible(v, rhs, qs2);
    bool lhs_zero = matrix_divisible(v, lhs, qs2);
    if (rhs_zero && !lhs_zero) {
      out.branch = ObstructionBranch::BinomialOddPrime;
      out.certified = true;
      out.detail = "right side of -qB = sum C(q,i)B^i is 0 mod q^" + std::to_string(out.s + 2) +
                   ", left side is not";
      return out;
    }
  }
  out.branch = ObstructionBranch::Inconclusive;
  out.detail = "q = " + q.get_str() + " and r = " + std::to_string(r) + " escape both branches";
  return out;
}

Rational padic_approximate(const CongruenceContext& ctx, const Rational& lambda, long t) {
  if (t < 1) throw std::invalid_argument("precision t must be at least 1");
  const Valuation& v = ctx.valuation();
  const Integer q = ctx.q();
  if (v.in_z_inv_p(lambda) && v.divisible_by(lambda, q)) return lambda;
  const ExtInt nu = v(lambda);
  const long j = std::max(0L, -nu.value());
  const Integer pj = ipow(Integer(ctx.p()), static_cast<unsigned long>(j));
  const Integer modulus = ipow(Integer(ctx.p()), static_cast<unsigned long>(t + j));
  // p^j λ = a / b with p ∤ b; c ≡ a (q b)⁻¹ mod p^{t+j}, so p^j λ - qc ≡ 0.
  Rational scaled = lambda * Rational(pj);
  Integer qb = q * scaled.get_den();
  Integer inv;
  mpz_invert(inv.get_mpz_t(), qb.get_mpz_t(), modulus.get_mpz_t());
  Integer c = scaled.get_num() * inv;
  mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
  return make_rational(q * c, pj);
}

ExtInt entrywise_valuation(const Valuation& v, const QMatrix& a, const QMatrix& b) {
  ExtInt best = ExtInt::infinity();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      best = min(best, v(Rational(a(i, j) - b(i, j))));
    }
  }
  return best;
}

Approximation approximate_generator(const CongruenceContext& ctx, RootId alpha, const Rational& lambda, long t) {
  if (t < 1) throw std::invalid_argument("precision t must be at least 1");
  const ChevalleyBasis& cb = ctx.basis();
  const Valuation& v = ctx.valuation();
  const GroupElement target = cb.x(alpha, lambda);
  // Entries of x_α(λ) - x_α(μ) are Σ_k (λ^k - μ^k) D_k; for ν(λ) < 0 the
  // factor Σ λ^i μ^{k-1-i} loses up to (k-1)ν(λ).
  const long kmax = static_cast<long>(cb.divided_powers(alpha).size());
  const ExtInt nu = v(lambda);
  long inner = t;
  if (!nu.is_infinite() && nu.value() < 0) inner += (kmax - 1) * -nu.value();
  Approximation out;
  for (int attempt = 0; attempt < 64; ++attempt, ++inner) {
    out.mu = padic_approximate(ctx, lambda, inner);
    out.h = cb.x(alpha, out.mu);
    out.achieved = entrywise_valuation(v, target.matrix(), out.h.matrix());
    out.inner_precision = inner;
    if (out.achieved >= ExtInt(t)) return out;
  }
  throw std::logic_error("approximate_generator did not reach the requested precision");
}

}  // namespace chev
