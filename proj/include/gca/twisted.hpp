#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gca/cohomology.hpp"
#include "gca/fd_algebra.hpp"
#include "gca/group.hpp"
#include "gca/linalg.hpp"

namespace gca {

/// M_n(Q^θ Γ₁) with rows and columns indexed by pairs (k, j), k a coset of Γ₁ and
/// j < sizes[k]. Basis E_{(m,i),(k,j)}γ sits in degree γ_m γ γ_k⁻¹.
struct TwistedMatrixAlgebra {
  FineSubgroupData fine;
  std::vector<std::size_t> sizes;
  PairTable theta;
  /// Elements of Γ₁ in index order.
  std::vector<Elem> gamma1;
  GradedAlgebraFD algebra;

  std::size_t n() const;
  /// Flat row/column index of (k, j).
  std::size_t flat(int k, std::size_t j) const;
  /// (k, j) of a flat row/column index.
  std::pair<int, std::size_t> pair_of(std::size_t r) const;
  /// Basis index of E_{r,c}γ for flat r, c.
  std::size_t index(std::size_t r, std::size_t c, Elem gamma) const;
};

/// Throws NotACocycle if θ restricted to Γ₁ is not a normalized nowhere-zero 2-cocycle,
/// InvalidArgument on a size mismatch.
TwistedMatrixAlgebra build_twisted_matrix_algebra(const FiniteGroup& g, const FineSubgroupData& fine,
                                                  const std::vector<std::size_t>& sizes, const PairTable& theta);

/// Positions of V's basis vectors in degree γ.
std::vector<std::size_t> indices_of(const std::vector<Elem>& v_degrees, Elem gamma);

struct FineStructure {
  MultCocycleZ chi;
  /// ι_γ : V_{γ_k} → V_γ for γ in the support (indexed by element; empty on Γ₀).
  std::vector<QMatrix> iota;

  const FineSubgroupData& fine() const { return chi.fine; }
};

/// Basis of A_α ⊆ End V described by (Γ₁, χ, ι): the span of
/// Σ_k Σ_{γ∈Γ_k} χ(α,γ) ι_{αγ} ι_{αγ_k}⁻¹ a_k ι_γ⁻¹ T_γ over matrix units a_k.
std::vector<QMatrix> structure_span(const FiniteGroup& g, const FineStructure& s, const std::vector<Elem>& v_degrees,
                                    Elem alpha);

/// Whether the homogeneous basis spans exactly the algebra described by s, degree by degree.
bool reproduces(const FiniteGroup& g, const FineStructure& s, const std::vector<Elem>& v_degrees,
                const std::vector<QMatrix>& basis, const std::vector<Elem>& degrees);

enum class PhiPrefactor { Correct, Omitted, Transposed };

/// Images Φ(E_{(m,i),(k,j)}γ) = χ(γ_m,γ) Σ_{β∈Γ_k} χ(g,β) ι_{gβ} E_ij ι_β⁻¹ T_β in End V,
/// with E_ij the unit V_{γ_k} → V_{γ_m} in V's basis and g = γ_m γ γ_k⁻¹. Verifies
/// multiplicativity on all basis pairs, injectivity and degrees; throws VerificationFailed.
std::vector<QMatrix> phi_isomorphism(const FiniteGroup& g, const TwistedMatrixAlgebra& t, const FineStructure& target,
                                     const std::vector<Elem>& v_degrees, PhiPrefactor prefactor = PhiPrefactor::Correct);

enum class Irreducibility { Irreducible, Reducible, Inconclusive };

std::string_view to_string(Irreducibility r);

struct IrreducibilityResult {
  Irreducibility verdict = Irreducibility::Inconclusive;
  /// A nonzero proper graded A-invariant subspace when reducible.
  std::vector<QVector> certificate;
  std::vector<std::string> notes;
};

/// Exact in the semisimple regime; otherwise searches for an invariant subspace.
/// Throws InvalidArgument if the basis is not a graded subalgebra of End V.
IrreducibilityResult graded_irreducible(const FiniteGroup& g, const std::vector<QMatrix>& basis,
                                        const std::vector<Elem>& degrees, const std::vector<Elem>& v_degrees,
                                        std::uint64_t seed = 0, std::size_t random_trials = 32);

/// (Γ₁, γ_k, χ, ι) for a graded irreducible subalgebra of End V with V_e ≠ 0.
/// Throws NotIrreducible, SplitFieldRequired, VerificationFailed, InvalidArgument.
FineStructure recover_fine_structure(const FiniteGroup& g, const std::vector<QMatrix>& basis,
                                     const std::vector<Elem>& degrees, const std::vector<Elem>& v_degrees);

}  // namespace gca
