#pragma once

// Exact checks of the defining relations among x_α(λ), m_α(λ), h_α(λ).

#include "chev/chevalley.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace chev {

struct CheckOutcome {
  bool pass = true;
  std::size_t samples = 0;
  std::string detail;  // first mismatch when !pass
};

/// h_α(λ) is diagonal, λ^{⟨γ,α⟩} on e_γ and 1 on the Cartan block.
CheckOutcome weight_action_check(const ChevalleyBasis& cb, RootId alpha, const Rational& lambda);

struct RelationRResult {
  bool pass = true;
  std::optional<int> sign;  // ε, constant over samples
  std::size_t samples = 0;
  std::string detail;
};

/// m_α(λ) x_β(μ) m_α(λ)⁻¹ = x_{s_α(β)}(ε λ^{⟨s_α(β),α⟩} μ) with one ε for all
/// samples (λ ≠ 0, μ). Samples with μ = 0 are checked but do not fix ε.
RelationRResult relation_R_check(const ChevalleyBasis& cb, RootId alpha, RootId beta,
                                 std::span<const std::pair<Rational, Rational>> samples);

struct CommutatorTerm {
  IntervalEntry entry;  // γ = iα + jβ
  int constant;         // C_ij
};

/// ghg⁻¹h⁻¹.
GroupElement commutator(const GroupElement& g, const GroupElement& h);

/// Π_{γ ∈ (α,β)} x_γ(C_ij λ^i μ^j) in interval order.
GroupElement commutator_product(const ChevalleyBasis& cb, std::span<const CommutatorTerm> terms,
                                const Rational& lambda, const Rational& mu);

/// Integer C_ij with [x_α(λ), x_β(μ)] = Π x_{iα+jβ}(C_ij λ^i μ^j), read off
/// [x_α(1), x_β(1)] factor by factor and confirmed on a spanning set of
/// (λ, μ). Throws std::invalid_argument for α = ±β and std::runtime_error
/// when no consistent constants exist.
std::vector<CommutatorTerm> commutator_constants(const ChevalleyBasis& cb, RootId alpha, RootId beta);

/// True iff g has the form of an element of U_+.
bool triangularity_check(const ChevalleyBasis& cb, const GroupElement& g);

struct SuiteRow {
  std::string relation;
  CheckOutcome outcome;
};

/// The relation suite, each relation over at least `samples` seeded samples:
/// one-parameter, h-multiplicative, relation-R, commutator-constants,
/// m-conjugates-h, weight-action, torus-commutes, m-inverse, lift-conjugation.
std::vector<SuiteRow> relation_suite(const ChevalleyBasis& cb, std::size_t samples, std::uint64_t seed);

}  // namespace chev
