#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gca/conformal.hpp"
#include "gca/group.hpp"
#include "gca/mpoly.hpp"

namespace gca {

/// Square matrix of polynomials.
struct PolyMatrix {
  std::size_t n = 0;
  std::vector<MPoly> entries;

  PolyMatrix() = default;
  explicit PolyMatrix(std::size_t size) : n(size), entries(size * size) {}
  static PolyMatrix identity(std::size_t size);
  MPoly& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
  const MPoly& at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
  bool operator==(const PolyMatrix&) const = default;
};

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
MPoly determinant(const PolyMatrix& m);
PolyMatrix adjugate(const PolyMatrix& m);
PolyMatrix substitute(const PolyMatrix& m, const Substitution& s);

/// Element of Cend^Γ_N: N×N matrix over Q[T,x] with row/column degrees α_1..α_N.
struct CendMatrix {
  std::vector<Elem> degrees;
  std::vector<MPoly> entries;

  static CendMatrix zero(std::vector<Elem> degrees);
  static CendMatrix unit(std::vector<Elem> degrees, std::size_t i, std::size_t j, const MPoly& f = MPoly(1));

  std::size_t size() const { return degrees.size(); }
  MPoly& at(std::size_t i, std::size_t j) { return entries[i * size() + j]; }
  const MPoly& at(std::size_t i, std::size_t j) const { return entries[i * size() + j]; }
  bool is_zero() const;
  bool operator==(const CendMatrix&) const = default;
  std::string str() const;
};

/// Degree of a nonzero homogeneous matrix (entries vanish unless α_iα_j⁻¹ = γ). Throws NotHomogeneous.
std::optional<Elem> cend_degree(const GradingContext& ctx, const CendMatrix& a);

/// Multipliers on the six shift terms of the product formula: the −σ(α) factor and
/// φ(α,α⁻¹) in the f-substitution, σ(αβ)λ and φ(α⁻¹,αβ) in the T-shift of g, σ(α_i)λ and
/// φ(α⁻¹,α_i) in the x-shift of g. All +1 is the correct formula; tests flip one at a time.
struct CendFormula {
  std::array<int, 6> sign{1, 1, 1, 1, 1, 1};
  static CendFormula mutated(std::size_t which);
};

/// (a_ℓ b) for homogeneous a, b. Entries of a, b may contain λ, μ as constants.
CendMatrix cend_product(const GradingContext& ctx, const CendMatrix& a, const CendMatrix& b,
                        const MPoly& ell = MPoly::variable(Var::Lambda), const CendFormula& formula = {});

/// (fE_ij)_ℓ(gE_jk) at (i,k), given α_i, α_j, α_k.
MPoly cend_entry_product(const GradingContext& ctx, Elem ai, Elem aj, Elem ak, const MPoly& f, const MPoly& g,
                         const MPoly& ell, const CendFormula& formula = {});

struct CendAssociativityReport {
  bool passed = true;
  std::size_t identities_checked = 0;
  std::optional<std::string> failure;
};

/// Associativity as a polynomial identity for all single-entry matrices T^a x^b E_ij, a+b ≤ degree.
CendAssociativityReport check_cend_associativity(const GradingContext& ctx, const std::vector<Elem>& degrees,
                                                 unsigned degree, const CendFormula& formula = {});

/// Conformal algebra on the basis x^a E_ij (a ≤ degree). Products leaving the truncation are
/// recorded as closure defects.
GradedConformalAlgebra cend_truncated(const GradingContext& ctx, const std::vector<Elem>& degrees, unsigned degree);

/// [a]_f = Q⁻¹(x)[a]Q^Γ(T,x), Q^Γ = ⊕Q_γ(x − σ(γ)T), where q_blocks maps a degree γ to the
/// n_γ×n_γ matrix Q_γ(T) (missing degrees: identity). Throws NotInvertibleOverPolyRing,
/// NonzeroCocycle (the formula is only an isomorphism for φ ≡ 0), InvalidArgument.
CendMatrix change_basis(const GradingContext& ctx, const CendMatrix& a, const std::map<Elem, PolyMatrix>& q_blocks);

/// Restriction of a degree-e element to the indices of degree γ with x ↦ σ(γ)x; the result
/// lives in the ungraded Cend (all degrees 0 of the trivial group). Throws NotDegreeE.
CendMatrix pi_gamma(const GradingContext& ctx, const CendMatrix& a, Elem gamma);

}  // namespace gca
