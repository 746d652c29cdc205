#pragma once

#include "chev/exactnum.hpp"

#include <cstdint>
#include <random>

namespace chev {

/// Seeded sample source. Draws are defined in terms of raw mt19937_64
/// output only, so sample streams are identical across standard libraries.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t n);
  long range(long lo, long hi);  // inclusive
  bool coin() { return (next() & 1U) != 0; }

  /// ±2^a 3^b with |a|, |b| <= 3.
  Rational smooth_unit();
  /// ±c / p^k with 1 <= c <= max_numerator, 0 <= k <= max_shift.
  Rational z_inv_p(long p, long max_numerator = 9, long max_shift = 3);
  /// Nonzero element of Z[1/p] with p-valuation exactly k.
  Rational with_valuation(long p, long k);
  /// Random rational a/b, |a| <= bound, 1 <= b <= bound; nonzero if requested.
  Rational small_rational(long bound, bool nonzero);

 private:
  std::mt19937_64 engine_;
};

}  // namespace chev
