#include "doctest.h"

#include "fixtures.hpp"
#include "gca/cend.hpp"
#include "gca/error.hpp"

using namespace gca;

namespace {
const MPoly T = MPoly::variable(Var::T);
const MPoly X = MPoly::variable(Var::X);
const MPoly L = MPoly::variable(Var::Lambda);

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalInconsistency;
}

PolyMatrix poly_matrix(std::size_t n, std::initializer_list<MPoly> entries) {
  PolyMatrix m(n);
  m.entries.assign(entries.begin(), entries.end());
  return m;
}
}  // namespace

TEST_CASE("product examples") {
  auto triv = GradingContext::trivial();
  auto one = CendMatrix::unit({0}, 0, 0);
  CHECK(cend_product(triv, one, one) == one);
  auto a = CendMatrix::unit({0}, 0, 0, X), b = CendMatrix::unit({0}, 0, 0, T);
  CHECK(cend_product(triv, a, b).at(0, 0) == X * (T + L));

  auto ctx = fixtures::z2(-1);
  std::vector<Elem> deg = {0, 1};
  auto e12 = CendMatrix::unit(deg, 0, 1), e21 = CendMatrix::unit(deg, 1, 0);
  CHECK(cend_degree(ctx, e12) == 1);
  CHECK(cend_product(ctx, e12, e21) == CendMatrix::unit(deg, 0, 0));
  // with a nontrivial g the shifts T -> T + lambda, x -> x + lambda show up
  CHECK(cend_product(ctx, e12, CendMatrix::unit(deg, 1, 0, T * X)).at(0, 0) == (T + L) * (X + L));
  // the x-shift uses sigma(alpha_i): row index of degree u flips the sign
  CHECK(cend_product(ctx, e21, CendMatrix::unit(deg, 0, 1, X)).at(1, 1) == X - L);

  CendMatrix mixed = CendMatrix::unit(deg, 0, 0);
  mixed.at(0, 1) = MPoly(1);
  CHECK(kind_of([&] { cend_product(ctx, mixed, e12); }) == ErrorKind::NotHomogeneous);
}

TEST_CASE("associativity on small contexts") {
  auto triv = GradingContext::trivial();
  CHECK(check_cend_associativity(triv, {0}, 2).passed);
  CHECK(check_cend_associativity(fixtures::z2(-1), {0, 1}, 2).passed);
  CHECK(check_cend_associativity(fixtures::z2(1, 2), {0, 1}, 2).passed);
  auto r = check_cend_associativity(fixtures::z2(1, 2), {0, 1}, 1, CendFormula::mutated(4));
  CHECK_FALSE(r.passed);
  CHECK(r.failure.has_value());
  // with phi = 0 flipping the x-shift is conjugation by x -> -x, still associative
  CHECK(check_cend_associativity(fixtures::z2(-1), {0, 1}, 1, CendFormula::mutated(4)).passed);
}

TEST_CASE("each planted sign mutation is caught") {
  auto ctx = fixtures::z2(1, 2);
  for (std::size_t k = 0; k < 6; ++k) {
    CAPTURE(k);
    CHECK_FALSE(check_cend_associativity(ctx, {0, 1}, 1, CendFormula::mutated(k)).passed);
  }
}

TEST_CASE("truncated Cend is not closed") {
  auto ctx = fixtures::z2(1);
  auto c = cend_truncated(ctx, {0, 1}, 2);
  CHECK(c.rank() == 12);
  CHECK_FALSE(c.closure_defects.empty());
  auto r = check_axioms(c);
  CHECK_FALSE(r.closure);
  CHECK(r.grading);
  // constant matrices are closed
  auto c0 = cend_truncated(ctx, {0, 1}, 0);
  CHECK(c0.closure_defects.empty());
  CHECK(check_axioms(c0).passed());
}

TEST_CASE("change of basis") {
  auto ctx = fixtures::z2(-1);
  std::vector<Elem> deg = {0, 1, 1};
  auto a = CendMatrix::unit(deg, 0, 1, T * X + 1);
  CHECK(change_basis(ctx, a, {}) == a);
  CHECK(change_basis(ctx, a, {{1, PolyMatrix::identity(2)}}) == a);

  auto triv = GradingContext::trivial();
  auto s = CendMatrix::unit({0}, 0, 0, T * X);
  CHECK(change_basis(triv, s, {{0, poly_matrix(1, {MPoly(3)})}}) == s);
  CHECK(kind_of([&] { change_basis(triv, s, {{0, poly_matrix(1, {T + 1})}}); }) ==
        ErrorKind::NotInvertibleOverPolyRing);
  CHECK(kind_of([&] { change_basis(fixtures::z2(1, 2), a, {}); }) == ErrorKind::NonzeroCocycle);
  CHECK(kind_of([&] { change_basis(ctx, a, {{1, PolyMatrix::identity(3)}}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("change of basis is an isomorphism of lambda-products") {
  struct Case {
    GradingContext ctx;
    std::vector<Elem> deg;
    std::map<Elem, PolyMatrix> q;
  };
  std::vector<Case> cases = {
      {GradingContext::trivial(), {0, 0}, {{0, poly_matrix(2, {MPoly(1), T, MPoly(0), MPoly(1)})}}},
      {fixtures::z2(-1), {0, 1, 1}, {{1, poly_matrix(2, {MPoly(1), T + 1, MPoly(0), MPoly(1)})}}},
      {fixtures::z2(1), {1, 0, 0}, {{0, poly_matrix(2, {MPoly(2), MPoly(0), T * T, MPoly(1)})}}},
  };
  std::vector<MPoly> mons = {MPoly(1), T, X, T * X};
  for (const auto& cs : cases) {
    const std::size_t n = cs.deg.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l)
            for (const auto& f : mons)
              for (const auto& g : mons) {
                auto a = CendMatrix::unit(cs.deg, i, j, f), b = CendMatrix::unit(cs.deg, k, l, g);
                auto lhs = change_basis(cs.ctx, cend_product(cs.ctx, a, b), cs.q);
                auto rhs = cend_product(cs.ctx, change_basis(cs.ctx, a, cs.q), change_basis(cs.ctx, b, cs.q));
                CHECK(lhs == rhs);
              }
  }
}

TEST_CASE("projections") {
  auto ctx = fixtures::z2(-1);
  std::vector<Elem> deg = {0, 1, 1};
  CendMatrix id = CendMatrix::zero(deg);
  for (std::size_t i = 0; i < 3; ++i) id.at(i, i) = MPoly(1);
  CendMatrix id2 = CendMatrix::zero({0, 0});
  id2.at(0, 0) = id2.at(1, 1) = MPoly(1);
  CHECK(pi_gamma(ctx, id, 1) == id2);
  CHECK(pi_gamma(ctx, id, 0) == CendMatrix::unit({0}, 0, 0));

  auto a = CendMatrix::unit(deg, 2, 2, T * X);
  CHECK(pi_gamma(ctx, a, 1).at(1, 1) == -(T * X));
  auto z4 = GradingContext::untwisted(FiniteGroup::cyclic(4));
  CHECK(pi_gamma(z4, CendMatrix::unit({0, 1}, 0, 0), 2).size() == 0);
  CHECK(kind_of([&] { pi_gamma(ctx, CendMatrix::unit(deg, 0, 1), 0); }) == ErrorKind::NotDegreeE);
}

TEST_CASE("projections are homomorphisms") {
  std::vector<GradingContext> ctxs = {fixtures::z2(-1), fixtures::z2(1, 2)};
  std::vector<Elem> deg = {0, 1, 1};
  std::vector<MPoly> mons = {MPoly(1), T, X, T * X, X * X};
  auto triv = GradingContext::trivial();
  for (const auto& ctx : ctxs)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) {
          if (deg[i] != deg[j] || deg[j] != deg[k]) continue;
          for (const auto& f : mons)
            for (const auto& g : mons) {
              auto a = CendMatrix::unit(deg, i, j, f), b = CendMatrix::unit(deg, j, k, g);
              for (Elem gamma : {0, 1})
                CHECK(pi_gamma(ctx, cend_product(ctx, a, b), gamma) ==
                      cend_product(triv, pi_gamma(ctx, a, gamma), pi_gamma(ctx, b, gamma)));
            }
        }
}
