#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gca/conformal.hpp"
#include "gca/hermite.hpp"

namespace gca {

enum class Side { Left, Right, Two };

std::string_view to_string(Side s);

/// Throws InvalidArgument if a coordinate involves a variable other than T.
PolyVector to_poly_vector(const ConformalElement& a);
ConformalElement to_element(const PolyVector& v);

struct ClosureResult {
  PolySubmodule module;
  std::size_t rounds = 0;
  /// The bound on rounds was hit before the module stabilised.
  bool overflow = false;
  /// (rank, pivot-degree sum) after each round.
  std::vector<std::pair<std::size_t, int>> progress;
};

/// Smallest Q[T]-submodule containing the seeds and closed under λ-products with basis
/// elements on the requested side(s). Throws NotHomogeneous for inhomogeneous seeds.
ClosureResult ideal_closure(const GradedConformalAlgebra& c, const std::vector<ConformalElement>& seeds, Side side,
                            std::size_t max_rounds = 64);

enum class Verdict { Simple, NotSimple, Inconclusive };

std::string_view to_string(Verdict v);

struct SimplicityReport {
  Verdict verdict = Verdict::Inconclusive;
  bool nonzero_product = false;
  std::size_t seeds_checked = 0;
  /// A nonzero proper graded ideal and one seed generating it, when found.
  std::optional<PolySubmodule> ideal;
  std::optional<ConformalElement> ideal_seed;
  /// is_graded_simple of the underlying algebra when c = Cur A.
  std::optional<bool> current_verdict;
  std::vector<std::string> notes;
};

/// Screens every basis element times each multiple by two-sided closure; when c was built
/// as Cur A the finite-dimensional verdict is authoritative.
SimplicityReport conformal_simplicity_suite(const GradedConformalAlgebra& c,
                                            const std::vector<MPoly>& multiples = {MPoly(1), MPoly::variable(Var::T)});

}  // namespace gca
