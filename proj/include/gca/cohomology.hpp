#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gca/group.hpp"

namespace gca {

using OneCochain = std::vector<Rational>;

/// A failing instance of φ(αβ,γ) + σ(γ)φ(α,β) = φ(α,βγ) + φ(β,γ).
struct CocycleViolation {
  Elem a = 0, b = 0, c = 0;
  Rational lhs, rhs;
  std::string describe(const FiniteGroup& g) const;
};

/// First failing triple, or a (e,e,e) record if φ(e,e) ≠ 0.
std::optional<CocycleViolation> find_cocycle_violation(const GradingContext& ctx);
bool check_additive_cocycle(const GradingContext& ctx);

/// φ(α,e) = φ(e,α) = 0 and φ(α⁻¹,α) = σ(α)φ(α,α⁻¹). Returns true or throws
/// InternalInconsistency; only meaningful for a validated cocycle.
bool cocycle_consequences(const GradingContext& ctx);

/// (δτ)(α,β) = σ(β)τ(α) + τ(β) − τ(αβ). Requires τ(e) = 0, since (δτ)(e,e) = τ(e).
PairTable coboundary_of(const OneCochain& tau, const GradingContext& ctx);

/// Some τ with δτ = target, if any (direct linear solve).
std::optional<OneCochain> solve_coboundary(const GradingContext& ctx, const PairTable& target);

/// Weights w on pairs with Σ w(a,b)(δτ)(a,b) = 0 for every τ but Σ w·target ≠ 0;
/// nullopt when target is a coboundary.
std::optional<PairTable> coboundary_obstruction(const GradingContext& ctx, const PairTable& target);

/// τ with δτ = φ; throws NoSolution.
OneCochain find_trivializing_cochain(const GradingContext& ctx);

/// θ(αβ,γ)θ(α,β) = θ(α,βγ)θ(β,γ) on a subgroup, θ nonzero there, θ(e,e) = 1.
bool check_group_cocycle(const FiniteGroup& g, const ElementSet& sub, const PairTable& theta);

/// χ together with the coset data it is normalized against.
struct MultCocycleZ {
  PairTable chi;
  FineSubgroupData fine;
};

/// Description of the first failed condition, or nullopt.
std::optional<std::string> find_mult_cocycle_violation(const FiniteGroup& g, const MultCocycleZ& z);
bool check_mult_cocycle_Z(const FiniteGroup& g, const MultCocycleZ& z);

/// χ(γ,β) = θ(γ_q⁻¹γγ_k, γ_k⁻¹β) for β∈Γ_k, γβ∈Γ_q, else 0. Throws NotACocycle.
MultCocycleZ chi_from_theta(const FiniteGroup& g, const PairTable& theta, const FineSubgroupData& fine);

}  // namespace gca
