#pragma once

#include <array>
#include <optional>
#include <vector>

#include "gca/group.hpp"
#include "gca/linalg.hpp"

namespace gca {

/// Finite-dimensional Γ-graded algebra over Q with a homogeneous basis e_1..e_d and
/// e_i e_j = Σ_k c_ijk e_k.
class GradedAlgebraFD {
 public:
  GradedAlgebraFD() = default;
  /// mult[(i*d + j)*d + k] = c_ijk. Throws InvalidArgument on shape mismatch.
  GradedAlgebraFD(std::vector<Elem> degrees, std::vector<Rational> mult);

  /// n×n matrices, every unit in degree e.
  static GradedAlgebraFD matrix_algebra(std::size_t n, Elem e = 0);
  /// Twisted group algebra over the subgroup `sub`: basis β in sub (index order), β·γ = θ(β,γ)βγ,
  /// graded by the group. θ defaults to 1.
  static GradedAlgebraFD group_algebra(const FiniteGroup& g, const ElementSet& sub,
                                       const std::optional<PairTable>& theta = std::nullopt);
  static GradedAlgebraFD direct_sum(const GradedAlgebraFD& a, const GradedAlgebraFD& b);
  /// Structure constants of the span of the given matrices; throws InvalidArgument if the
  /// span is not closed under products or the matrices are dependent.
  static GradedAlgebraFD from_matrices(const std::vector<QMatrix>& basis, std::vector<Elem> degrees);

  std::size_t dim() const { return degrees_.size(); }
  Elem degree(std::size_t i) const { return degrees_[i]; }
  const std::vector<Elem>& degrees() const { return degrees_; }
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return mult_[(i * dim() + j) * dim() + k]; }
  const std::vector<Rational>& mult() const { return mult_; }
  bool operator==(const GradedAlgebraFD&) const = default;

  QVector product(const QVector& a, const QVector& b) const;
  QVector basis_vector(std::size_t i) const;
  /// Matrix of x ↦ a x (columns indexed by input basis).
  QMatrix left_mult(const QVector& a) const;
  QMatrix right_mult(const QVector& a) const;

  /// First triple (i,j,k) with (e_i e_j) e_k ≠ e_i (e_j e_k).
  std::optional<std::array<std::size_t, 3>> associativity_violation() const;
  bool is_associative() const { return !associativity_violation(); }
  /// First (i,j,k) with c_ijk ≠ 0 but deg k ≠ deg i · deg j.
  std::optional<std::array<std::size_t, 3>> grading_violation(const FiniteGroup& g) const;
  bool products_vanish() const;

  /// Indices of basis vectors of degree γ.
  std::vector<std::size_t> indices_of_degree(Elem g) const;

 private:
  std::vector<Elem> degrees_;
  std::vector<Rational> mult_;
};

/// Jacobson radical as a basis of coordinate vectors (trace-form kernel; char 0).
std::vector<QVector> radical_fd(const GradedAlgebraFD& a);
std::vector<QVector> center_fd(const GradedAlgebraFD& a);
std::optional<QVector> unit_fd(const GradedAlgebraFD& a);

/// Block e·A for a primitive central idempotent e of degree e.
struct GradedBlock {
  QVector idempotent;
  /// Homogeneous basis of the block, as coordinate vectors in A.
  std::vector<QVector> basis;
  GradedAlgebraFD algebra;
};

/// Minimal graded two-sided ideals. Throws NotSemisimple or SplitFieldRequired.
std::vector<GradedBlock> decompose_semisimple_graded(const GradedAlgebraFD& a, Elem e);
/// Throws SplitFieldRequired if the verdict depends on a field extension.
bool is_graded_simple(const GradedAlgebraFD& a, Elem e);

}  // namespace gca
