#pragma once

#include <string>
#include <vector>

#include "gca/conformal.hpp"
#include "gca/fd_algebra.hpp"
#include "gca/group.hpp"

namespace gca::fixtures {

struct NamedContext {
  std::string name;
  GradingContext ctx;
};

struct NamedAlgebra {
  std::string name;
  GradedAlgebraFD algebra;
};

inline GradingContext z2(long sigma_u, long phi_uu = 0) {
  auto c = GradingContext::untwisted(FiniteGroup::cyclic(2));
  c.sigma = {1, sigma_u};
  c.phi(1, 1) = phi_uu;
  return c;
}

/// trivial; Z2 with sigma(u) = +-1, phi = 0; Z2 with sigma = 1, phi(u,u) = 2.
inline std::vector<NamedContext> small_contexts() {
  return {{"trivial", GradingContext::trivial()},
          {"Z2 sigma(u)=1", z2(1)},
          {"Z2 sigma(u)=-1", z2(-1)},
          {"Z2 sigma=1 phi(u,u)=2", z2(1, 2)}};
}

inline GradedAlgebraFD twisted_z2(long theta_uu) {
  PairTable t(2, Rational(1));
  t(1, 1) = theta_uu;
  return GradedAlgebraFD::group_algebra(FiniteGroup::cyclic(2), {0, 1}, t);
}

/// The algebra with every basis degree replaced by e (index 0).
inline GradedAlgebraFD flatten(const GradedAlgebraFD& a) {
  return GradedAlgebraFD(std::vector<Elem>(a.dim(), 0), a.mult());
}

/// Q, QZ2, M2(Q), M2(Q)+Q, twisted QZ2 with theta(u,u) = -1. The Z2-graded ones are
/// flattened when the context group is trivial.
inline std::vector<NamedAlgebra> current_fixtures(bool group_is_trivial) {
  auto maybe_flat = [&](GradedAlgebraFD a) { return group_is_trivial ? flatten(a) : a; };
  return {{"Q", GradedAlgebraFD::matrix_algebra(1)},
          {"QZ2", maybe_flat(twisted_z2(1))},
          {"M2(Q)", GradedAlgebraFD::matrix_algebra(2)},
          {"M2(Q)+Q", GradedAlgebraFD::direct_sum(GradedAlgebraFD::matrix_algebra(2), GradedAlgebraFD::matrix_algebra(1))},
          {"M1(Q^chi Z2)", maybe_flat(twisted_z2(-1))}};
}

}  // namespace gca::fixtures

namespace gca::fixtures {

inline QMatrix unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  QMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

/// Algebras of dimension at most 4, graded by Z2 unless flattened.
inline std::vector<NamedAlgebra> small_algebras(bool group_is_trivial) {
  auto maybe_flat = [&](GradedAlgebraFD a) { return group_is_trivial ? flatten(a) : a; };
  QMatrix e11 = unit_matrix(2, 0, 0), e12 = unit_matrix(2, 0, 1), e21 = unit_matrix(2, 1, 0),
          e22 = unit_matrix(2, 1, 1);
  QMatrix nil(2, 2);
  nil(0, 1) = 1;
  return {{"Q", GradedAlgebraFD::matrix_algebra(1)},
          {"Q+Q", GradedAlgebraFD::direct_sum(GradedAlgebraFD::matrix_algebra(1), GradedAlgebraFD::matrix_algebra(1))},
          {"QZ2", maybe_flat(twisted_z2(1))},
          {"M1(Q^chi Z2)", maybe_flat(twisted_z2(-1))},
          {"M2(Q)", GradedAlgebraFD::matrix_algebra(2)},
          {"M2(Q) checkerboard", maybe_flat(GradedAlgebraFD::from_matrices({e11, e22, e12, e21}, {0, 0, 1, 1}))},
          {"upper triangular", GradedAlgebraFD::from_matrices({e11, e12, e22}, {0, 0, 0})},
          {"Q[x]/x^2 odd x", maybe_flat(GradedAlgebraFD::from_matrices({QMatrix::identity(2), nil}, {0, 1}))},
          {"zero product", GradedAlgebraFD({0, 0}, std::vector<Rational>(8, Rational(0)))}};
}

}  // namespace gca::fixtures
