#include "doctest.h"

#include "gca/error.hpp"
#include "gca/fd_algebra.hpp"

using namespace gca;

namespace {

QMatrix unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  QMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

// upper triangular 2x2: E11, E12, E22
GradedAlgebraFD upper_triangular() {
  return GradedAlgebraFD::from_matrices({unit_matrix(2, 0, 0), unit_matrix(2, 0, 1), unit_matrix(2, 1, 1)}, {0, 0, 0});
}

GradedAlgebraFD q() { return GradedAlgebraFD::matrix_algebra(1); }

GradedAlgebraFD twisted_z2(long theta_uu) {
  PairTable t(2, Rational(1));
  t(1, 1) = theta_uu;
  return GradedAlgebraFD::group_algebra(FiniteGroup::cyclic(2), {0, 1}, t);
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST_CASE("constructions") {
  auto m2 = GradedAlgebraFD::matrix_algebra(2);
  CHECK(m2.dim() == 4);
  CHECK(m2.is_associative());
  std::vector<QMatrix> units;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) units.push_back(unit_matrix(2, i, j));
  CHECK(GradedAlgebraFD::from_matrices(units, {0, 0, 0, 0}) == m2);
  // E12 E21 = E11
  CHECK(m2.c(1, 2, 0) == 1);

  auto t = twisted_z2(-1);
  CHECK(t.c(1, 1, 0) == -1);
  CHECK(t.is_associative());
  CHECK_FALSE(t.grading_violation(FiniteGroup::cyclic(2)));

  auto s = GradedAlgebraFD::direct_sum(q(), m2);
  CHECK(s.dim() == 5);
  CHECK(s.is_associative());

  CHECK_THROWS_AS(GradedAlgebraFD::from_matrices({unit_matrix(2, 0, 1), unit_matrix(2, 1, 0)}, {0, 0}), Error);
  CHECK_THROWS_AS(GradedAlgebraFD::from_matrices({unit_matrix(2, 0, 1), unit_matrix(2, 0, 1)}, {0, 0}), Error);
}

TEST_CASE("planted defects") {
  auto m = GradedAlgebraFD::matrix_algebra(2).mult();
  m[(1 * 4 + 2) * 4 + 0] = 2;  // E12 E21 = 2 E11
  GradedAlgebraFD bad({0, 0, 0, 0}, m);
  CHECK_FALSE(bad.is_associative());

  auto t = twisted_z2(1).mult();
  GradedAlgebraFD wrong({0, 1}, t);
  t[(1 * 2 + 1) * 2 + 1] = 1;  // u*u gets a degree-u component
  GradedAlgebraFD graded_bad({0, 1}, t);
  CHECK_FALSE(wrong.grading_violation(FiniteGroup::cyclic(2)));
  CHECK(graded_bad.grading_violation(FiniteGroup::cyclic(2)));
}

TEST_CASE("radical") {
  CHECK(radical_fd(GradedAlgebraFD::matrix_algebra(2)).empty());
  CHECK(radical_fd(GradedAlgebraFD::direct_sum(q(), q())).empty());
  auto r = radical_fd(upper_triangular());
  REQUIRE(r.size() == 1);
  CHECK(r[0] == QVector{0, 1, 0});
  // zero product algebra is its own radical
  GradedAlgebraFD zero({0, 0}, std::vector<Rational>(8, Rational(0)));
  CHECK(radical_fd(zero).size() == 2);
}

TEST_CASE("center and unit") {
  auto m2 = GradedAlgebraFD::matrix_algebra(2);
  auto z = center_fd(m2);
  REQUIRE(z.size() == 1);
  CHECK(in_span(z, {1, 0, 0, 1}));
  CHECK(*unit_fd(m2) == QVector{1, 0, 0, 1});
  GradedAlgebraFD zero({0}, {Rational(0)});
  CHECK_FALSE(unit_fd(zero));
}

TEST_CASE("graded decomposition") {
  auto m2 = GradedAlgebraFD::matrix_algebra(2);
  CHECK(decompose_semisimple_graded(m2, 0).size() == 1);
  CHECK(is_graded_simple(m2, 0));

  auto qq = GradedAlgebraFD::direct_sum(q(), q());
  CHECK(decompose_semisimple_graded(qq, 0).size() == 2);
  CHECK_FALSE(is_graded_simple(qq, 0));

  // Q[i] graded by Z2 with i odd: only homogeneous idempotents are 0 and 1
  CHECK(is_graded_simple(twisted_z2(-1), 0));
  // QZ2 graded by Z2 is graded simple, though it splits ungraded
  CHECK(is_graded_simple(twisted_z2(1), 0));
  GradedAlgebraFD qz2_flat({0, 0}, twisted_z2(1).mult());
  auto flat_blocks = decompose_semisimple_graded(qz2_flat, 0);
  REQUIRE(flat_blocks.size() == 2);
  QVector plus{Rational(1, 2), Rational(1, 2)}, minus{Rational(1, 2), Rational(-1, 2)};
  bool ordered = flat_blocks[0].idempotent == plus && flat_blocks[1].idempotent == minus;
  bool swapped = flat_blocks[0].idempotent == minus && flat_blocks[1].idempotent == plus;
  CHECK((ordered || swapped));
  // Q(i) with trivial grading needs an extension to split
  GradedAlgebraFD qi_flat({0, 0}, twisted_z2(-1).mult());
  CHECK(kind_of([&] { decompose_semisimple_graded(qi_flat, 0); }) == ErrorKind::SplitFieldRequired);

  CHECK(kind_of([&] { decompose_semisimple_graded(upper_triangular(), 0); }) == ErrorKind::NotSemisimple);
  CHECK_FALSE(is_graded_simple(upper_triangular(), 0));
  GradedAlgebraFD zero({0}, {Rational(0)});
  CHECK_FALSE(is_graded_simple(zero, 0));
}

TEST_CASE("blocks are simple and span the algebra") {
  std::vector<GradedAlgebraFD> algebras = {
      GradedAlgebraFD::direct_sum(q(), twisted_z2(-1)),
      GradedAlgebraFD::direct_sum(GradedAlgebraFD::matrix_algebra(2), q()),
      GradedAlgebraFD::direct_sum(twisted_z2(1), GradedAlgebraFD::direct_sum(q(), GradedAlgebraFD::matrix_algebra(2))),
  };
  std::vector<std::size_t> expected = {2, 2, 3};
  for (std::size_t n = 0; n < algebras.size(); ++n) {
    const auto& a = algebras[n];
    auto blocks = decompose_semisimple_graded(a, 0);
    CHECK(blocks.size() == expected[n]);
    std::vector<QVector> all;
    for (const auto& b : blocks) {
      CHECK(is_graded_simple(b.algebra, 0));
      CHECK(b.algebra.is_associative());
      CHECK_FALSE(b.algebra.grading_violation(FiniteGroup::cyclic(2)));
      all.insert(all.end(), b.basis.begin(), b.basis.end());
    }
    CHECK(all.size() == a.dim());
    CHECK(span_basis(all, a.dim()).size() == a.dim());
  }
}
