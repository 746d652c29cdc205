#pragma once

// Finite crystallographic root systems of types A-G.
//
// Roots are stored as integer coefficient vectors in the basis of simple
// roots. The inner product {,} comes from a Gram matrix with long roots of
// squared length 2; short roots have squared length 1 (B, C, F) or 2/3 (G).
// Simple roots are numbered 1..rank following Bourbaki.

#include "chev/matrix.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chev {

using RootId = std::size_t;
using RootCoords = std::vector<int>;

/// A root iα + jβ of the positive-integer interval between α and β.
struct IntervalEntry {
  RootId root;
  int p;  // coefficient of α
  int q;  // coefficient of β
};

class RootSystem {
 public:
  /// Throws std::invalid_argument for combinations outside the classification
  /// (A1+, B2+, C2+, D4+, E6-8, F4, G2).
  static RootSystem build(char type, int rank);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const { return std::string(1, type_) + std::to_string(rank_); }

  /// cartan()[i][j] = ⟨α_{i+1}, α_{j+1}⟩ = 2{α_i,α_j}/{α_j,α_j}.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const QMatrix& gram() const { return gram_; }

  /// Roots in (height, lexicographic coordinates) order; negatives first.
  std::size_t size() const { return roots_.size(); }
  const RootCoords& coords(RootId r) const { return roots_.at(r); }
  QVector vector(RootId r) const;
  int height(RootId r) const { return heights_.at(r); }
  bool is_positive(RootId r) const { return heights_.at(r) > 0; }
  RootId negate(RootId r) const { return negation_.at(r); }
  /// i in 1..rank.
  RootId simple(int i) const;
  std::optional<RootId> find(const RootCoords& c) const;
  const std::vector<RootId>& positive_roots() const { return positive_; }

  Rational inner(const QVector& v, const QVector& w) const;
  /// ⟨v,w⟩ = 2{v,w}/{w,w}; throws std::invalid_argument when w = 0.
  Rational pair(const QVector& v, const QVector& w) const;
  /// ⟨β,α⟩ for roots, always an integer in [-3, 3].
  int pair(RootId beta, RootId alpha) const;
  Rational length_squared(RootId r) const;
  /// Human-readable form such as "a1+2a2" or "-a2".
  std::string name(RootId r) const;

  /// s_α(v) = v - ⟨v,α⟩α.
  QVector reflect(RootId alpha, const QVector& v) const;
  RootId reflect(RootId alpha, RootId beta) const;

  /// Roots iα + jβ (i, j >= 1) ordered by i+j, then i.
  /// Throws std::invalid_argument when α = ±β.
  std::vector<IntervalEntry> interval(RootId alpha, RootId beta) const;

  /// Known |W| and Coxeter number for the type.
  unsigned long long weyl_order() const;
  int coxeter_number() const;

 private:
  RootSystem() = default;

  char type_ = 'A';
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  QMatrix gram_;
  std::vector<RootCoords> roots_;
  std::vector<int> heights_;
  std::vector<RootId> negation_;
  std::vector<RootId> simple_;
  std::vector<RootId> positive_;
  std::map<RootCoords, RootId> index_;
};

/// Expected |Φ| for the type, for cross-checking construction.
std::size_t classification_root_count(char type, int rank);

}  // namespace chev
