#pragma once

// The eigenvalue-1 criterion for torsion of the representatives n₀T of a
// Weyl group element, torus surveys over those representatives, and exact
// infinite-order witnesses n₀h_β(2).

#include "chev/chevalley.hpp"
#include "chev/torsion_order.hpp"
#include "chev/weyl.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chev {

/// True iff w has no eigenvalue 1, i.e. every representative of w is torsion.
bool criterion(const WeylElement& w);

enum class SurveyVerdict { AllFiniteUniform, InfiniteWitnessFound, NonUniform };
std::string to_string(SurveyVerdict v);

struct TorusSample {
  std::vector<std::pair<RootId, Rational>> factors;  // h = Π h_β(λ)
  TorsionOrder order;
  bool power_identity = false;  // (n₀h)^m = n₀^m
  bool torus_collapse = false;  // Π_{i=1}^m h_{w^i(β)}(λ) = 1 for each factor
};

struct RepresentativeSurvey {
  WeylWord word;
  unsigned long m = 0;
  bool eigenvalue_one = false;
  std::vector<TorusSample> samples;
  SurveyVerdict verdict = SurveyVerdict::AllFiniteUniform;
  std::optional<Integer> common_order;
  /// Holds when eigenvalue_one is false: all finite, equal, in {m, 2m},
  /// dividing m², equal to m for odd m, both exact identities on every sample.
  bool invariants_hold = false;
  std::uint64_t seed = 0;
};

/// Throws std::invalid_argument for w = 1 or torus_samples = 0.
RepresentativeSurvey survey(const ChevalleyBasis& cb, const WeylElement& w, std::size_t torus_samples,
                            std::uint64_t seed);

struct InfiniteWitness {
  RootId beta = 0;
  QVector orbit_sum;
  GroupElement g{QMatrix()};
  TorsionOrder order;
  bool success = false;  // orbit sum nonzero and g of infinite order
};

/// Throws std::invalid_argument unless w has eigenvalue 1.
InfiniteWitness infinite_witness(const ChevalleyBasis& cb, const WeylElement& w);

struct ScanRow {
  WeylWord word;
  unsigned long m = 0;
  bool criterion = false;
  bool orbit_sum_zero = false;  // Σ w^i(v) = 0 for every simple root v
  std::optional<RepresentativeSurvey> survey;
  std::optional<bool> witness_ok;
};

/// Every element of W. Throws std::length_error when |W| > max_group_size.
std::vector<ScanRow> full_scan(const ChevalleyBasis& cb, std::size_t max_group_size, std::size_t torus_samples,
                               std::uint64_t seed);

}  // namespace chev
