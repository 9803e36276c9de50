#include "doctest.h"

#include <random>

#include "gca/error.hpp"
#include "gca/twisted.hpp"
#include "oracles.hpp"

using namespace gca;
using namespace gca::oracles;

namespace {

QMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<QVector> v;
  for (const auto& r : rows) {
    QVector row;
    for (long x : r) row.push_back(x);
    v.push_back(row);
  }
  return QMatrix::from_rows(v, v.front().size());
}

FiniteGroup trivial_group() { return FiniteGroup::cyclic(1); }

std::vector<Setup> setups() {
  auto z2 = FiniteGroup::cyclic(2), z4 = FiniteGroup::cyclic(4), s3 = FiniteGroup::symmetric3();
  // Leave the last coset of <(12)> out of the support.
  auto last = coset_decomposition(s3, {0, 1}, {}).coset(2);
  ElementSet s3_gap(last.begin(), last.end());
  return {{"Z2 n=1 chi=1", z2, {0, 1}, {}, {1}, 1},
          {"Z2 n=1 chi(u,u)=-1", z2, {0, 1}, {}, {1}, -1},
          {"Z2 n=2", z2, {0, 1}, {}, {2}, -1},
          {"Z2 trivial fine subgroup", z2, {0}, {}, {1, 2}, 1},
          {"Z4 {0,2} p=2", z4, {0, 2}, {}, {1, 1}, -1},
          {"Z4 {0,2} p=2 sizes 2,1", z4, {0, 2}, {}, {2, 1}, 3},
          {"Z4 {0} with gaps", z4, {0}, {1, 3}, {1, 2}, 1},
          {"S3 <(12)> p=3", s3, {0, 1}, {}, {1, 1, 1}, -1},
          {"S3 <(12)> mixed sizes", s3, {0, 1}, {}, {1, 2, 1}, 2},
          {"S3 <(12)> with a coset in Gamma0", s3, {0, 1}, s3_gap, {1, 2}, -1}};
}

}  // namespace

TEST_CASE("twisted matrix algebra examples") {
  auto g1 = trivial_group();
  auto fine1 = coset_decomposition(g1, {0}, {});
  auto m2 = build_twisted_matrix_algebra(g1, fine1, {2}, PairTable(1, Rational(1)));
  CHECK(m2.algebra == GradedAlgebraFD::matrix_algebra(2));

  auto z2 = FiniteGroup::cyclic(2);
  auto fine = coset_decomposition(z2, {0, 1}, {});
  auto qz2 = build_twisted_matrix_algebra(z2, fine, {1}, PairTable(2, Rational(1)));
  CHECK(qz2.algebra == GradedAlgebraFD::group_algebra(z2, {0, 1}));

  PairTable minus(2, Rational(1));
  minus(1, 1) = -1;
  auto qi = build_twisted_matrix_algebra(z2, fine, {1}, minus);
  QVector eu = qi.algebra.basis_vector(qi.index(0, 0, 1));
  QVector ee = qi.algebra.basis_vector(qi.index(0, 0, 0));
  CHECK(qi.algebra.product(eu, eu) == scale(Rational(-1), ee));

  PairTable bad(2, Rational(1));
  bad(0, 1) = 2;
  CHECK_THROWS_AS(build_twisted_matrix_algebra(z2, fine, {1}, bad), Error);
  try {
    build_twisted_matrix_algebra(z2, fine, {1}, bad);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotACocycle);
  }
  CHECK_THROWS_AS(build_twisted_matrix_algebra(z2, fine, {1, 1}, minus), Error);
}

TEST_CASE("twisted algebras are graded and associative") {
  std::mt19937 rng(1);
  for (const auto& su : setups()) {
    CAPTURE(su.name);
    auto tg = make_target(su, rng, false);
    CHECK(tg.t.algebra.is_associative());
    CHECK_FALSE(tg.t.algebra.grading_violation(su.g));
    std::size_t n = 0;
    for (auto k : su.sizes) n += k;
    CHECK(tg.t.algebra.dim() == n * n * su.gamma1.size());
  }
}

TEST_CASE("phi on trivial fine subgroup is the identity") {
  auto g1 = trivial_group();
  auto fine = coset_decomposition(g1, {0}, {});
  auto t = build_twisted_matrix_algebra(g1, fine, {2}, PairTable(1, Rational(1)));
  FineStructure s{MultCocycleZ{PairTable(1, Rational(1)), fine}, {QMatrix::identity(2)}};
  auto images = phi_isomorphism(g1, t, s, {0, 0});
  REQUIRE(images.size() == 4);
  CHECK(images[0] == mat({{1, 0}, {0, 0}}));
  CHECK(images[1] == mat({{0, 1}, {0, 0}}));
  CHECK(images[2] == mat({{0, 0}, {1, 0}}));
  CHECK(images[3] == mat({{0, 0}, {0, 1}}));
}

TEST_CASE("phi for QZ2 with arbitrary iota_u") {
  auto z2 = FiniteGroup::cyclic(2);
  auto fine = coset_decomposition(z2, {0, 1}, {});
  auto t = build_twisted_matrix_algebra(z2, fine, {1}, PairTable(2, Rational(1)));
  for (long c : {1L, 2L, -5L}) {
    FineStructure s{chi_from_theta(z2, PairTable(2, Rational(1)), fine), {QMatrix::identity(1), mat({{c}})}};
    auto images = phi_isomorphism(z2, t, s, {0, 1});
    REQUIRE(images.size() == 2);
    // Four basis pairs, checked against the twisted product directly.
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) CHECK(images[a] * images[b] == images[(a + b) % 2]);
  }
}

TEST_CASE("phi is a graded isomorphism for every fixture and gauge") {
  std::mt19937 rng(3);
  for (const auto& su : setups())
    for (bool gauge : {false, true})
      for (int rep = 0; rep < 3; ++rep) {
        CAPTURE(su.name);
        CAPTURE(gauge);
        auto tg = make_target(su, rng, gauge);
        auto images = phi_isomorphism(su.g, tg.t, tg.s, tg.vdeg);
        // The image is exactly the algebra the structure data describes.
        CHECK(reproduces(su.g, tg.s, tg.vdeg, images, tg.t.algebra.degrees()));
      }
}

TEST_CASE("a wrong prefactor is detected") {
  std::mt19937 rng(9);
  auto su = setups()[4];  // Z4 {0,2} p=2
  int detected = 0;
  for (int rep = 0; rep < 5; ++rep) {
    auto tg = make_target(su, rng, true);
    bool matters = false;
    for (Elem gm : tg.t.gamma1)
      for (Elem rep_m : tg.s.fine().reps) matters = matters || tg.s.chi.chi(rep_m, gm) != 1;
    if (!matters) continue;
    ++detected;
    CHECK_THROWS_AS(phi_isomorphism(su.g, tg.t, tg.s, tg.vdeg, PhiPrefactor::Omitted), Error);
    CHECK_THROWS_AS(phi_isomorphism(su.g, tg.t, tg.s, tg.vdeg, PhiPrefactor::Transposed), Error);
    CHECK_NOTHROW(phi_isomorphism(su.g, tg.t, tg.s, tg.vdeg));
  }
  CHECK(detected > 0);
}

TEST_CASE("inconsistent target data is rejected") {
  std::mt19937 rng(4);
  auto su = setups()[4];
  auto tg = make_target(su, rng, false);
  auto wrong_dims = tg.vdeg;
  wrong_dims.push_back(0);
  CHECK_THROWS_AS(phi_isomorphism(su.g, tg.t, tg.s, wrong_dims), Error);
  auto other = make_target(setups()[5], rng, false);
  CHECK_THROWS_AS(phi_isomorphism(su.g, other.t, tg.s, tg.vdeg), Error);
}

TEST_CASE("graded irreducibility examples") {
  auto g1 = trivial_group();
  std::vector<QMatrix> end2 = {mat({{1, 0}, {0, 0}}), mat({{0, 1}, {0, 0}}), mat({{0, 0}, {1, 0}}), mat({{0, 0}, {0, 1}})};
  CHECK(graded_irreducible(g1, end2, {0, 0, 0, 0}, {0, 0}).verdict == Irreducibility::Irreducible);

  auto diag = graded_irreducible(g1, {mat({{1, 0}, {0, 0}}), mat({{0, 0}, {0, 1}})}, {0, 0}, {0, 0});
  CHECK(diag.verdict == Irreducibility::Reducible);
  CHECK(diag.certificate == std::vector<QVector>{{1, 0}});

  auto tri = graded_irreducible(g1, {mat({{1, 0}, {0, 0}}), mat({{0, 1}, {0, 0}}), mat({{0, 0}, {0, 1}})}, {0, 0, 0},
                                {0, 0});
  CHECK(tri.verdict == Irreducibility::Reducible);
  CHECK(tri.certificate == std::vector<QVector>{{1, 0}});

  auto scalars = graded_irreducible(g1, {QMatrix::identity(2)}, {0}, {0, 0});
  CHECK(scalars.verdict == Irreducibility::Reducible);
  CHECK(scalars.certificate.size() == 1);

  // Q[i] acting on Q^2: the commutant is a field.
  auto qi = graded_irreducible(g1, {QMatrix::identity(2), mat({{0, -1}, {1, 0}})}, {0, 0}, {0, 0});
  CHECK(qi.verdict == Irreducibility::Irreducible);

  // Φ(M1(Q^χ Z2)) on V_e ⊕ V_u.
  auto z2 = FiniteGroup::cyclic(2);
  for (long t : {1L, -1L}) {
    auto r = graded_irreducible(z2, {QMatrix::identity(2), mat({{0, t}, {1, 0}})}, {0, 1}, {0, 1});
    CHECK(r.verdict == Irreducibility::Irreducible);
  }
  CHECK(graded_irreducible(z2, {QMatrix::identity(2)}, {0}, {0, 1}).verdict == Irreducibility::Reducible);
  CHECK_THROWS_AS(graded_irreducible(z2, {mat({{0, 1}, {0, 0}})}, {0}, {0, 1}), Error);
}

TEST_CASE("certificates are invariant graded proper subspaces") {
  auto z4 = FiniteGroup::cyclic(4);
  // Block-upper-triangular Z4-graded algebra on V_0 ⊕ V_2: reducible.
  std::vector<QMatrix> basis = {mat({{1, 0}, {0, 0}}), mat({{0, 0}, {0, 1}}), mat({{0, 1}, {0, 0}})};
  auto r = graded_irreducible(z4, basis, {0, 0, 2}, {0, 2});
  REQUIRE(r.verdict == Irreducibility::Reducible);
  for (const auto& v : r.certificate)
    for (const auto& a : basis) CHECK(in_span(span_basis(r.certificate, 2), a * v));
  CHECK_FALSE(r.certificate.empty());
  CHECK(r.certificate.size() < 2);
}

TEST_CASE("quaternion action stays undecided rather than wrong") {
  auto g1 = trivial_group();
  // Left multiplication by 1, i, j, k on H = Q^4.
  QMatrix one = QMatrix::identity(4);
  QMatrix i = mat({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
  QMatrix j = mat({{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}});
  QMatrix k = i * j;
  auto r = graded_irreducible(g1, {one, i, j, k}, {0, 0, 0, 0}, {0, 0, 0, 0});
  CHECK(r.verdict != Irreducibility::Reducible);
}

TEST_CASE("recovery of the full matrix algebra") {
  auto g1 = trivial_group();
  std::vector<QMatrix> end2 = {mat({{1, 0}, {0, 0}}), mat({{0, 1}, {0, 0}}), mat({{0, 0}, {1, 0}}), mat({{0, 0}, {0, 1}})};
  auto s = recover_fine_structure(g1, end2, {0, 0, 0, 0}, {0, 0});
  CHECK(s.fine().gamma1 == ElementSet{0});
  CHECK(s.fine().p() == 1);
  CHECK(s.chi.chi(0, 0) == 1);
  CHECK(s.iota[0] == QMatrix::identity(2));
}

TEST_CASE("recovery round-trips through build and phi") {
  std::mt19937 rng(21);
  for (const auto& su : setups())
    for (bool gauge : {false, true})
      for (int rep = 0; rep < 2; ++rep) {
        CAPTURE(su.name);
        CAPTURE(gauge);
        auto tg = make_target(su, rng, gauge);
        auto images = phi_isomorphism(su.g, tg.t, tg.s, tg.vdeg);
        const auto& degrees = tg.t.algebra.degrees();
        CHECK(graded_irreducible(su.g, images, degrees, tg.vdeg).verdict == Irreducibility::Irreducible);
        auto rec = recover_fine_structure(su.g, images, degrees, tg.vdeg);
        CHECK(rec.fine().gamma1 == su.gamma1);
        CHECK(check_mult_cocycle_Z(su.g, rec.chi));
        CHECK(reproduces(su.g, rec, tg.vdeg, images, degrees));
        // Per-degree spans agree with the original description as well.
        for (Elem a = 0; a < su.g.order(); ++a) {
          std::vector<QVector> x, y;
          for (const auto& m : structure_span(su.g, rec, tg.vdeg, a)) x.push_back(m.flat());
          for (const auto& m : structure_span(su.g, tg.s, tg.vdeg, a)) y.push_back(m.flat());
          std::size_t n2 = tg.vdeg.size() * tg.vdeg.size();
          CHECK(span_basis(x, n2) == span_basis(y, n2));
        }
      }
}

TEST_CASE("recovery errors") {
  auto g1 = trivial_group();
  auto expect = [](auto fn, ErrorKind kind) {
    try {
      fn();
      FAIL("no exception");
    } catch (const Error& err) {
      CHECK(err.kind() == kind);
    }
  };
  expect([&] { recover_fine_structure(g1, {mat({{1, 0}, {0, 0}}), mat({{0, 0}, {0, 1}})}, {0, 0}, {0, 0}); },
         ErrorKind::NotIrreducible);
  expect([&] { recover_fine_structure(g1, {QMatrix::identity(2), mat({{0, -1}, {1, 0}})}, {0, 0}, {0, 0}); },
         ErrorKind::SplitFieldRequired);
  auto z2 = FiniteGroup::cyclic(2);
  expect([&] { recover_fine_structure(z2, {QMatrix::identity(1)}, {0}, {1}); }, ErrorKind::InvalidArgument);
}
