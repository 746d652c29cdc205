#pragma once

// Exact decision of finite versus infinite order for rational matrices.
//
// A torsion element of GL_d(Q) has order dividing L(d) = lcm{n : φ(n) <= d}.
// The decision reduces g modulo odd primes ℓ that do not divide any entry
// denominator. Reduction is a ring homomorphism on such matrices, so
// g^L ≢ I (mod ℓ) proves g^L ≠ I. The kernel of GL_d(Z_(ℓ)) → GL_d(F_ℓ) is
// torsion-free for odd ℓ, so a finite-order g has the same order as its
// reduction; the candidate order from the reductions is then confirmed or
// refuted by exact powering over Q.

#include "chev/matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace chev {

/// L(d) = lcm{n >= 1 : φ(n) <= d}.
Integer torsion_exponent_bound(std::size_t d);
/// Prime factors of L(d), ascending.
std::vector<unsigned long> torsion_exponent_primes(std::size_t d);

struct TorsionOrder {
  bool finite = false;
  Integer order;          // least r | L(d) with g^r = I when finite
  Integer bound;          // L(d)
  std::uint64_t prime = 0;  // reduction prime used for the certificate
  std::string certificate;
};

/// Throws std::invalid_argument for a non-square or singular matrix.
TorsionOrder torsion_order(const QMatrix& g);

/// g^e ≡ I modulo the prime ℓ < 2^31; ℓ must not divide any denominator.
bool power_is_identity_mod(const QMatrix& g, const Integer& exponent, std::uint64_t prime);

}  // namespace chev
