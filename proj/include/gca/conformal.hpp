#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gca/cohomology.hpp"
#include "gca/fd_algebra.hpp"
#include "gca/mpoly.hpp"

namespace gca {

/// Coordinates over the basis; entries are polynomials in T (other variables
/// are treated as constants by the λ-product).
using ConformalElement = std::vector<MPoly>;

/// Free Q[T]-module with Γ-degreed basis e_1..e_N and
/// (e_i λ e_j) = Σ_k c_ijk(λ,T) e_k.
class GradedConformalAlgebra {
 public:
  GradedConformalAlgebra() = default;
  /// structure[i*N + j] has N entries in Q[λ,T]. Throws InvalidArgument.
  GradedConformalAlgebra(GradingContext ctx, std::vector<Elem> degrees, std::vector<std::vector<MPoly>> structure);

  const GradingContext& ctx() const { return ctx_; }
  std::size_t rank() const { return degrees_.size(); }
  Elem degree(std::size_t i) const { return degrees_[i]; }
  const std::vector<Elem>& degrees() const { return degrees_; }
  const std::vector<MPoly>& structure(std::size_t i, std::size_t j) const { return structure_[i * rank() + j]; }
  const std::vector<std::vector<MPoly>>& structure() const { return structure_; }

  ConformalElement basis_element(std::size_t i, const MPoly& coeff = MPoly(1)) const;
  ConformalElement zero() const { return ConformalElement(rank()); }

  /// Set when the algebra was built as Cur A.
  std::optional<GradedAlgebraFD> current_of;
  /// Products that left the span of the basis while the algebra was built.
  std::vector<std::string> closure_defects;

 private:
  GradingContext ctx_;
  std::vector<Elem> degrees_;
  std::vector<std::vector<MPoly>> structure_;
};

/// Degree of a nonzero homogeneous element; nullopt for zero. Throws NotHomogeneous.
std::optional<Elem> element_degree(const GradedConformalAlgebra& c, const ConformalElement& a);

/// (a_ℓ b) for homogeneous a, b, where ℓ is the product variable (λ by default, or any
/// expression in λ, μ). Throws NotHomogeneous.
ConformalElement lambda_product(const GradedConformalAlgebra& c, const ConformalElement& a, const ConformalElement& b,
                                const MPoly& ell = MPoly::variable(Var::Lambda));

/// T·a as a module element (T acts by multiplication).
ConformalElement t_times(const ConformalElement& a);

struct AxiomReport {
  bool grading = true;
  bool sesquilinearity = true;
  bool associativity = true;
  bool closure = true;
  /// First violated instance per failed law.
  std::vector<std::string> failures;
  /// 0-based basis indices of the first violated instance (k unused for sesquilinearity).
  std::optional<std::array<std::size_t, 3>> first_violation;
  std::size_t identities_checked = 0;

  bool passed() const { return grading && sesquilinearity && associativity && closure; }
};

/// Grading, both sesquilinearity laws on T·e_i, associativity
/// (a_λ b)_μ c = a_λ (b_ν c), ν = σ(α)(μ − λ − φ(β⁻¹,α⁻¹)), on basis triples and on
/// triples with one T-multiple, and closure of the basis.
AxiomReport check_axioms(const GradedConformalAlgebra& c);

/// Cur A over ctx. Throws NotAssociative (unless allow_nonassociative), InvalidArgument
/// if A's grading is incompatible.
GradedConformalAlgebra cur(const GradedAlgebraFD& a, const GradingContext& ctx, bool allow_nonassociative = false);

/// New algebra over (Γ,σ,φ'), φ' = φ + δτ: module action h ↦ h(T − τ(α)) on degree α and
/// (a_[λ] b) = (a_{λ+τ(α⁻¹)} b). Throws CocyclesNotCohomologous.
GradedConformalAlgebra regrade_by_tau(const GradedConformalAlgebra& c, const OneCochain& tau, const PairTable& phi_new);
/// The same element of the underlying space written in the regraded module structure.
ConformalElement regrade_element(const GradedConformalAlgebra& c, const OneCochain& tau, const ConformalElement& a);

/// Change of basis e_i ↦ e_i + p(T) e_j for i ≠ j of equal degree.
GradedConformalAlgebra transvect(const GradedConformalAlgebra& c, std::size_t i, std::size_t j, const MPoly& p);

/// Checks that a ↦ Q⁻¹ a Q preserves the λ-product of Cur(M_n). Throws SingularMatrix,
/// InvalidArgument if c is not a current algebra over a full matrix algebra.
bool conjugation_automorphism(const GradedConformalAlgebra& c, const QMatrix& q);

}  // namespace gca
