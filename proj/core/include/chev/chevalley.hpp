#pragma once

// The Chevalley group in its adjoint representation.
//
// The Lie algebra has basis e_α (α ∈ Φ) and h_i = h_{α_i}. Basis vectors are
// ordered by decreasing height: positive roots from the highest root down,
// then h_1..h_rank, then negative roots from -α_i down to the lowest root.
// In this order ad e_α is strictly upper triangular for every α > 0.

#include "chev/matrix.hpp"
#include "chev/rootsys.hpp"
#include "chev/weyl.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chev {

/// Dense integer matrix for the divided powers (ad e_α)^k / k!.
struct IntMatrix {
  std::size_t n = 0;
  std::vector<long> data;

  explicit IntMatrix(std::size_t dim = 0) : n(dim), data(dim * dim, 0) {}
  long& operator()(std::size_t i, std::size_t j) { return data[i * n + j]; }
  long operator()(std::size_t i, std::size_t j) const { return data[i * n + j]; }
  bool is_zero() const;
};

/// Sparse vector in the Lie algebra: (basis index, coefficient).
using LieVector = std::vector<std::pair<std::size_t, long>>;

/// One application of a distinguished generator.
struct Letter {
  enum class Kind : std::uint8_t { X, M, H };
  Kind kind;
  RootId root;
  Rational scalar;

  Letter inverse() const;
  std::string to_string(const RootSystem& rs) const;
};

using GroupWord = std::vector<Letter>;

/// d×d invertible matrix with optional provenance word.
class GroupElement {
 public:
  explicit GroupElement(QMatrix matrix, std::optional<GroupWord> word = std::nullopt)
      : matrix_(std::move(matrix)), word_(std::move(word)) {}

  const QMatrix& matrix() const { return matrix_; }
  const std::optional<GroupWord>& word() const { return word_; }
  std::size_t dim() const { return matrix_.rows(); }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  /// Throws std::domain_error for a singular matrix.
  GroupElement inverse() const;
  GroupElement pow(unsigned long k) const;
  bool is_identity() const { return matrix_.is_identity(); }

  /// Exact matrix equality; provenance is ignored.
  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.matrix_ == b.matrix_; }

 private:
  QMatrix matrix_;
  std::optional<GroupWord> word_;
};

/// Basis label: a root vector e_α or a Cartan vector h_i (i in 1..rank).
struct BasisLabel {
  bool is_root;
  RootId root;
  int cartan;
};

struct BasisIntegrity {
  bool antisymmetric = true;
  bool negation_rule = true;     // N_{-α,-β} = -N_{α,β}
  bool string_lengths = true;    // |N_{α,β}| = p + 1
  bool jacobi = true;
  std::size_t pairs_checked = 0;
  std::size_t triples_checked = 0;
  std::string first_failure;

  bool ok() const { return antisymmetric && negation_rule && string_lengths && jacobi; }
};

class ChevalleyBasis {
 public:
  /// Structure constants by the extraspecial-pair recursion: N_{α,β} = +(p+1)
  /// on every extraspecial pair, positive roots ordered as in RootSystem.
  explicit ChevalleyBasis(std::shared_ptr<const RootSystem> rs);
  static ChevalleyBasis build(char type, int rank);

  const RootSystem& roots() const { return *rs_; }
  std::shared_ptr<const RootSystem> root_system() const { return rs_; }
  std::size_t dim() const { return labels_.size(); }
  const BasisLabel& label(std::size_t index) const { return labels_.at(index); }
  std::size_t root_index(RootId r) const { return root_pos_.at(r); }
  std::size_t cartan_index(int i) const { return cartan_pos_.at(static_cast<std::size_t>(i - 1)); }

  /// N_{α,β}; 0 when α + β ∉ Φ.
  int structure_constant(RootId a, RootId b) const;
  std::optional<RootId> root_sum(RootId a, RootId b) const;
  /// Coefficients of h_α in h_1..h_rank.
  const std::vector<int>& coroot(RootId r) const { return coroots_.at(r); }

  LieVector bracket(std::size_t a, std::size_t b) const;
  LieVector bracket(const LieVector& x, const LieVector& y) const;

  /// ad e_α and its divided powers (ad e_α)^k/k!, k = 1.. until zero.
  const IntMatrix& ad(RootId r) const { return divided_powers_.at(r).front(); }
  const std::vector<IntMatrix>& divided_powers(RootId r) const { return divided_powers_.at(r); }

  BasisIntegrity check_integrity() const;

  GroupElement identity() const;
  /// x_α(λ) = exp(λ ad e_α).
  GroupElement x(RootId alpha, const Rational& lambda) const;
  /// m_α(λ) = x_α(λ) x_{-α}(-λ⁻¹) x_α(λ); throws std::invalid_argument for λ = 0.
  GroupElement m(RootId alpha, const Rational& lambda) const;
  /// h_α(λ) = m_α(λ) m_α(1)⁻¹; throws std::invalid_argument for λ = 0.
  GroupElement h(RootId alpha, const Rational& lambda) const;
  GroupElement evaluate(const Letter& letter) const;
  GroupElement evaluate(const GroupWord& word) const;

  /// n₀ = m_{α_{i1}}(1) ⋯ m_{α_{ik}}(1).
  GroupElement lift_word(const WeylWord& word) const;

  /// λ with g = x_α(λ), read off the designated entry of ad e_α and confirmed
  /// by exact comparison; nullopt when g ∉ U_α.
  std::optional<Rational> recover_parameter(RootId alpha, const GroupElement& g) const;

  /// Unipotent upper triangular in the height-ordered basis.
  bool is_upper_unitriangular(const GroupElement& g) const;

 private:
  void compute_structure_constants();
  void compute_divided_powers();

  std::shared_ptr<const RootSystem> rs_;
  std::vector<BasisLabel> labels_;
  std::vector<std::size_t> root_pos_;
  std::vector<std::size_t> cartan_pos_;
  std::vector<std::vector<int>> coroots_;
  std::vector<std::optional<RootId>> sums_;  // |Φ|×|Φ|
  std::vector<int> constants_;               // |Φ|×|Φ|
  std::vector<std::vector<IntMatrix>> divided_powers_;
  std::vector<std::pair<std::size_t, std::size_t>> designated_;  // (row, col) per root
};

}  // namespace chev
