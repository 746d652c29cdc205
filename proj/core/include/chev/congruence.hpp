#pragma once

// Congruence subgroups Γ_q of Γ = g(Z[1/p]) in the adjoint realization:
// membership, a torsion probe with exact certificates, the binomial
// obstruction to g^r = I, and p-adic approximation of root elements by
// root elements with parameters in qZ[1/p].

#include "chev/chevalley.hpp"
#include "chev/exactnum.hpp"
#include "chev/torsion_order.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace chev {

class CongruenceContext {
 public:
  /// Throws std::invalid_argument unless p is prime, gcd(q, p) = 1 and
  /// q > 2. With allow_small_modulus the bound relaxes to q >= 2.
  CongruenceContext(const ChevalleyBasis& cb, long p, long q, bool allow_small_modulus = false);

  const ChevalleyBasis& basis() const { return *cb_; }
  long p() const { return v_.prime(); }
  long q() const { return q_; }
  const Valuation& valuation() const { return v_; }

 private:
  const ChevalleyBasis* cb_;
  Valuation v_;
  long q_;
};

/// Entries in Z[1/p] and either det = 1 or a provenance word whose letters
/// use Z[1/p] scalars (units of Z[1/p] for m and h letters).
bool in_gamma(const CongruenceContext& ctx, const GroupElement& g);
/// in_gamma and g ≡ I entry-wise modulo q.
bool in_gamma_q(const CongruenceContext& ctx, const GroupElement& g);

struct ProbeReport {
  std::size_t words = 0;
  std::size_t identity_skipped = 0;
  std::size_t certified_infinite = 0;
  std::size_t torsion_found = 0;
  std::optional<GroupWord> violating_word;  // first word of finite order
  std::optional<Integer> violating_order;
  std::uint64_t seed = 0;
  bool pass() const { return torsion_found == 0; }
};

/// word_count random words of length 1..max_word_len in the generators
/// x_α(qλ), λ ∈ Z[1/p]; every product other than I is run through
/// torsion_order.
ProbeReport torsionfree_probe(const CongruenceContext& ctx, std::size_t word_count, std::size_t max_word_len,
                              std::uint64_t seed);

enum class ObstructionBranch {
  NotDivisible,      // rB ≢ 0 mod q^{s+1} while CB² ≡ 0 mod q^{s+1}
  BinomialOddPrime,  // r = q odd prime: Σ_{i>=2} C(q,i)B^i ≡ 0 mod q^{s+2}, qB not
  Inconclusive,
};
std::string to_string(ObstructionBranch b);

struct ObstructionReport {
  long s = 0;  // B ≡ 0 mod q^s, B ≢ 0 mod q^{s+1}
  long r = 0;
  ObstructionBranch branch = ObstructionBranch::Inconclusive;
  bool certified = false;  // g^r ≠ I established
  std::string detail;
};

/// Throws std::invalid_argument unless g ∈ Γ_q, g ≠ I and r is prime.
ObstructionReport binomial_obstruction(const CongruenceContext& ctx, const GroupElement& g, long r);

/// μ ∈ qZ[1/p] with ν_p(λ - μ) >= t; λ itself when λ ∈ qZ[1/p].
/// Throws std::invalid_argument for t < 1.
Rational padic_approximate(const CongruenceContext& ctx, const Rational& lambda, long t);

struct Approximation {
  Rational mu;
  GroupElement h{QMatrix()};
  ExtInt achieved = ExtInt::infinity();  // min entry valuation of x_α(λ) - h
  long inner_precision = 0;              // precision handed to padic_approximate
};

/// h = x_α(μ) with achieved >= t. Throws std::invalid_argument for t < 1.
Approximation approximate_generator(const CongruenceContext& ctx, RootId alpha, const Rational& lambda, long t);

/// min over entries of ν_p(a_ij - b_ij); ∞ when a = b.
ExtInt entrywise_valuation(const Valuation& v, const QMatrix& a, const QMatrix& b);

}  // namespace chev
