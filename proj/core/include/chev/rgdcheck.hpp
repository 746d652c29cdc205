#pragma once

// Sampled exact verification of the root group datum axioms and of the
// valuation φ_α(x_α(λ)) = ν(λ) on the root groups.

#include "chev/chevalley.hpp"
#include "chev/exactnum.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace chev {

class RootGroupValuation {
 public:
  RootGroupValuation(const ChevalleyBasis& cb, Valuation v) : cb_(&cb), v_(v) {}

  const ChevalleyBasis& basis() const { return *cb_; }
  const Valuation& valuation() const { return v_; }

  /// φ_α(g) for g ∈ U_α; φ_α(1) = ∞. Throws std::invalid_argument if g ∉ U_α.
  ExtInt phi(RootId alpha, const GroupElement& g) const;

  /// g ∈ U_{α,k}. Throws std::invalid_argument if g ∉ U_α.
  bool filtration_member(RootId alpha, long k, const GroupElement& g) const;

 private:
  const ChevalleyBasis* cb_;
  Valuation v_;
};

struct AxiomReport {
  std::string axiom;
  std::size_t samples = 0;
  bool pass = true;
  bool informational = false;  // reported, not sampled
  std::string detail;          // counterexample or summary
  std::uint64_t seed = 0;
};

/// RGD0-RGD3 sampled over every admissible root (pair) with at least
/// `budget` samples per axiom; RGD4 is informational. The scalar stream
/// starts with the corner values ±1, ±p^{±3} and is deterministic in `seed`.
std::vector<AxiomReport> check_rgd(const ChevalleyBasis& cb, long prime, std::size_t budget, std::uint64_t seed);

/// VRGD0-VRGD4 for φ_α = ν_p ∘ x_α⁻¹.
std::vector<AxiomReport> check_vrgd(const RootGroupValuation& rgv, std::size_t budget, std::uint64_t seed);

bool all_pass(const std::vector<AxiomReport>& reports);

}  // namespace chev
