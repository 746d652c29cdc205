#include "chev/sampling.hpp"

#include <stdexcept>

namespace chev {

std::uint64_t SampleRng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("below(0)");
  return next() % n;
}

long SampleRng::range(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Rational SampleRng::smooth_unit() {
  long a = range(-3, 3);
  long b = range(-3, 3);
  Rational x = qpow(Rational(2), a) * qpow(Rational(3), b);
  return coin() ? x : Rational(-x);
}

Rational SampleRng::z_inv_p(long p, long max_numerator, long max_shift) {
  long c = range(1, max_numerator);
  long k = range(0, max_shift);
  Rational x = make_rational(Integer(c), ipow(Integer(p), static_cast<unsigned long>(k)));
  return coin() ? x : Rational(-x);
}

Rational SampleRng::with_valuation(long p, long k) {
  long unit = range(1, 3 * p);
  while (unit % p == 0) ++unit;
  Rational x = Rational(unit) * qpow(Rational(p), k);
  return coin() ? x : Rational(-x);
}

Rational SampleRng::small_rational(long bound, bool nonzero) {
  long a = range(nonzero ? 1 : 0, bound);
  long b = range(1, bound);
  Rational x = make_rational(a, b);
  return coin() ? x : Rational(-x);
}

}  // namespace chev
