#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "gca/conformal.hpp"
#include "gca/error.hpp"
#include "test_support.hpp"

using namespace gca;

namespace {
const MPoly T = MPoly::variable(Var::T);
const MPoly L = MPoly::variable(Var::Lambda);

ConformalElement scaled(ConformalElement v, const MPoly& f) {
  for (auto& x : v) x *= f;
  return v;
}
}  // namespace

TEST_CASE("sesquilinearity examples with trivial grading") {
  auto c = cur(GradedAlgebraFD::matrix_algebra(2), GradingContext::trivial());
  auto p = lambda_product(c, c.basis_element(1), c.basis_element(2));
  CHECK(p == c.basis_element(0));  // E12 E21 = E11
  CHECK(lambda_product(c, c.basis_element(1, T), c.basis_element(2)) == scaled(p, -L));
  CHECK(lambda_product(c, c.basis_element(1), c.basis_element(2, T)) == scaled(p, T + L));
}

TEST_CASE("current product matches f(-lambda) g(T+lambda) ab") {
  auto a = GradedAlgebraFD::matrix_algebra(2);
  auto c = cur(a, GradingContext::trivial());
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 30; ++rep) {
    MPoly f = testing::random_mpoly(rng, 3, 1), g = testing::random_mpoly(rng, 3, 1);
    std::size_t i = rng() % 4, j = rng() % 4;
    Substitution fs, gs;
    fs.bind(Var::T, -L);
    gs.bind(Var::T, T + L);
    MPoly coeff = substitute(f, fs) * substitute(g, gs);
    ConformalElement want(4);
    QVector ab = a.product(a.basis_vector(i), a.basis_vector(j));
    for (std::size_t k = 0; k < 4; ++k) want[k] = coeff * MPoly(ab[k]);
    CHECK(lambda_product(c, c.basis_element(i, f), c.basis_element(j, g)) == want);
  }
}

TEST_CASE("twisted left factor") {
  auto c = cur(fixtures::twisted_z2(1), fixtures::z2(-1));
  // a in C_u with coefficient T: factor T(-sigma(u) lambda) = lambda
  auto p = lambda_product(c, c.basis_element(1, T), c.basis_element(0));
  CHECK(p == c.basis_element(1, L));
}

TEST_CASE("homogeneity is required") {
  auto c = cur(fixtures::twisted_z2(1), fixtures::z2(1));
  ConformalElement mixed = {MPoly(1), MPoly(1)};
  CHECK_THROWS_AS(lambda_product(c, mixed, c.basis_element(0)), Error);
  CHECK(lambda_product(c, c.zero(), c.basis_element(1)) == c.zero());
}

TEST_CASE("current algebras satisfy the axioms") {
  for (const auto& [cname, ctx] : fixtures::small_contexts())
    for (const auto& [aname, a] : fixtures::current_fixtures(ctx.group.order() == 1)) {
      CAPTURE(cname);
      CAPTURE(aname);
      auto c = cur(a, ctx);
      auto r = check_axioms(c);
      CHECK(r.passed());
      CHECK(r.identities_checked > 0);
    }
  auto unit = cur(GradedAlgebraFD::matrix_algebra(1), GradingContext::trivial());
  CHECK(lambda_product(unit, unit.basis_element(0), unit.basis_element(0)) == unit.basis_element(0));
}

TEST_CASE("non-associative input is rejected or reported") {
  auto m = GradedAlgebraFD::matrix_algebra(2).mult();
  m[(1 * 4 + 2) * 4 + 0] = 2;
  GradedAlgebraFD bad({0, 0, 0, 0}, m);
  CHECK_THROWS_AS(cur(bad, GradingContext::trivial()), Error);
  auto c = cur(bad, GradingContext::trivial(), true);
  auto r = check_axioms(c);
  CHECK_FALSE(r.associativity);
  CHECK(r.grading);
}

TEST_CASE("planted grading violation") {
  auto c = cur(fixtures::twisted_z2(1), fixtures::z2(1));
  auto s = c.structure();
  s[1 * 2 + 1][1] = MPoly(1);  // u*u acquires a degree-u component
  GradedConformalAlgebra bad(c.ctx(), c.degrees(), s);
  auto r = check_axioms(bad);
  CHECK_FALSE(r.grading);
  REQUIRE_FALSE(r.failures.empty());
  CHECK(r.failures[0].find("(2,2,2)") != std::string::npos);
}

TEST_CASE("planted sesquilinear-compatible but wrong lambda dependence") {
  // (e lambda e) = lambda e is not associative: (e_l e)_m e = l m e, e_l (e_{m-l} e) = l (m - l) e
  GradedConformalAlgebra c(GradingContext::trivial(), {0}, {{L}});
  auto r = check_axioms(c);
  CHECK_FALSE(r.associativity);
}

TEST_CASE("structure constants with x are rejected") {
  CHECK_THROWS_AS(GradedConformalAlgebra(GradingContext::trivial(), {0}, {{MPoly::variable(Var::X)}}), Error);
}

TEST_CASE("transvection keeps the axioms") {
  for (const auto& [cname, ctx] : fixtures::small_contexts()) {
    if (ctx.group.order() == 1) continue;
    CAPTURE(cname);
    auto a = GradedAlgebraFD::direct_sum(fixtures::twisted_z2(1), fixtures::twisted_z2(-1));
    auto c = transvect(cur(a, ctx), 0, 2, T + 1);
    CHECK(check_axioms(c).passed());
    bool t_dependent = false;
    for (const auto& row : c.structure())
      for (const auto& x : row) t_dependent = t_dependent || x.depends_on(Var::T);
    CHECK(t_dependent);
    CHECK_THROWS_AS(transvect(c, 0, 1, T), Error);
  }
}

TEST_CASE("regrading") {
  auto a = fixtures::twisted_z2(1);
  // phi(u,u) = 2 with sigma = 1 is the coboundary of tau(u) = 1; regrading by -tau trivializes
  auto ctx = fixtures::z2(1, 2);
  auto c = cur(a, ctx);
  OneCochain tau = {0, -1};
  PairTable target(2);
  auto r = regrade_by_tau(c, tau, target);
  CHECK(r.ctx().phi_is_zero());
  CHECK(check_axioms(r).passed());
  CHECK_THROWS_AS(regrade_by_tau(c, {0, 1}, target), Error);

  // zero cochain changes nothing
  auto same = regrade_by_tau(c, {0, 0}, ctx.phi);
  CHECK(same.structure() == c.structure());

  // T-dependent structure: regrade, check, and round-trip
  auto t = transvect(cur(GradedAlgebraFD::direct_sum(a, fixtures::twisted_z2(-1)), fixtures::z2(1)), 1, 3, T * T - 2);
  OneCochain tau2 = {0, Rational(3, 2)};
  PairTable phi2 = coboundary_of(tau2, t.ctx());
  auto t2 = regrade_by_tau(t, tau2, phi2);
  CHECK(check_axioms(t2).passed());
  CHECK(t2.structure() != t.structure());
  auto back = regrade_by_tau(t2, {0, Rational(-3, 2)}, t.ctx().phi);
  CHECK(back.structure() == t.structure());

  // composing two regradings equals one by the sum
  OneCochain tau3 = {0, 5};
  PairTable phi3 = coboundary_of({0, Rational(13, 2)}, t.ctx());
  auto twice = regrade_by_tau(t2, tau3, phi3);
  auto once = regrade_by_tau(t, {0, Rational(13, 2)}, phi3);
  CHECK(twice.structure() == once.structure());
}

TEST_CASE("regraded products agree with shifted original products") {
  auto a = GradedAlgebraFD::direct_sum(fixtures::twisted_z2(1), fixtures::twisted_z2(-1));
  auto c = transvect(cur(a, fixtures::z2(1, 2)), 0, 2, T + 3);
  OneCochain tau = {0, Rational(-2, 3)};
  PairTable phi_new = c.ctx().phi;
  auto d = coboundary_of(tau, c.ctx());
  for (Elem x = 0; x < 2; ++x)
    for (Elem y = 0; y < 2; ++y) phi_new(x, y) += d(x, y);
  auto r = regrade_by_tau(c, tau, phi_new);
  CHECK(check_axioms(r).passed());
  std::mt19937_64 rng(4);
  for (int rep = 0; rep < 20; ++rep) {
    std::size_t i = rng() % 4, j = rng() % 4;
    auto x = c.basis_element(i, testing::random_mpoly(rng, 2, 1, 3));
    auto y = c.basis_element(j, testing::random_mpoly(rng, 2, 1, 3));
    Elem alpha = c.degree(i);
    auto shifted = lambda_product(c, x, y, L + tau[static_cast<std::size_t>(c.ctx().inv(alpha))]);
    CHECK(lambda_product(r, regrade_element(c, tau, x), regrade_element(c, tau, y)) ==
          regrade_element(c, tau, shifted));
  }
}

TEST_CASE("conjugation automorphisms of Cur(M_n)") {
  auto c2 = cur(GradedAlgebraFD::matrix_algebra(2), GradingContext::trivial());
  CHECK(conjugation_automorphism(c2, QMatrix::identity(2)));
  QMatrix swap(2, 2);
  swap(0, 1) = swap(1, 0) = 1;
  CHECK(conjugation_automorphism(c2, swap));
  QMatrix diag(2, 2);
  diag(0, 0) = 1;
  diag(1, 1) = 2;
  CHECK(conjugation_automorphism(c2, diag));
  QMatrix singular(2, 2);
  singular(0, 0) = 1;
  CHECK_THROWS_AS(conjugation_automorphism(c2, singular), Error);
  auto c3 = cur(GradedAlgebraFD::matrix_algebra(3), GradingContext::trivial());
  QMatrix q3(3, 3);
  q3(0, 0) = 1; q3(0, 1) = 2; q3(1, 1) = -1; q3(1, 2) = Rational(1, 3); q3(2, 0) = 5; q3(2, 2) = 1;
  CHECK(conjugation_automorphism(c3, q3));
  CHECK_THROWS_AS(conjugation_automorphism(cur(fixtures::twisted_z2(1), fixtures::z2(1)), swap), Error);
}
