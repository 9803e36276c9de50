#include "doctest.h"

#include <algorithm>
#include <array>

#include "gca/error.hpp"
#include "gca/group.hpp"

using namespace gca;

namespace {
ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalInconsistency;
}
}  // namespace

TEST_CASE("table validation") {
  auto z2 = FiniteGroup::from_table({"e", "u"}, {{0, 1}, {1, 0}});
  CHECK(z2.order() == 2);
  CHECK(z2.identity() == 0);
  CHECK(z2.inv(1) == 1);
  CHECK(kind_of([] { FiniteGroup::from_table({"e", "u"}, {{0, 0}, {1, 0}}); }) == ErrorKind::NotLatinSquare);
  CHECK(kind_of([] { FiniteGroup::from_table({"a", "b"}, {{1, 0}, {1, 0}}); }) == ErrorKind::NotLatinSquare);
  // Latin square without identity: x*y = x - y mod 3
  CHECK(kind_of([] { FiniteGroup::from_table({"0", "1", "2"}, {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}); }) ==
        ErrorKind::NoIdentity);
  // loop of order 5 with identity but not associative
  std::vector<std::vector<Elem>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK(kind_of([&] { FiniteGroup::from_table({"e", "a", "b", "c", "d"}, loop); }) == ErrorKind::NotAssociative);
  CHECK(kind_of([] { FiniteGroup::from_table({"e", "u"}, {{0, 2}, {1, 0}}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("identity need not be index zero") {
  auto g = FiniteGroup::from_table({"u", "e"}, {{1, 0}, {0, 1}});
  CHECK(g.identity() == 1);
  auto d = coset_decomposition(g, {0, 1}, {});
  CHECK(d.reps == std::vector<Elem>{1});
}

TEST_CASE("canonical groups") {
  CHECK(FiniteGroup::cyclic(1).order() == 1);
  auto z4 = FiniteGroup::cyclic(4);
  CHECK(z4.element_order(1) == 4);
  CHECK(z4.element_order(2) == 2);

  auto s3 = FiniteGroup::symmetric3();
  // independent oracle: compose the permutations directly
  using Perm = std::array<int, 3>;
  const std::array<Perm, 6> perms = {{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      Perm c{perms[i][perms[j][0]], perms[i][perms[j][1]], perms[i][perms[j][2]]};
      CHECK(perms[static_cast<std::size_t>(s3.mul(i, j))] == c);
    }
  int involutions = 0;
  for (Elem a : s3.elements()) involutions += s3.element_order(a) == 2;
  CHECK(involutions == 3);
  CHECK(s3.mul(1, 3) != s3.mul(3, 1));
}

TEST_CASE("sigma homomorphism check") {
  auto ctx = GradingContext::untwisted(FiniteGroup::cyclic(2));
  ctx.sigma = {1, -1};
  CHECK(check_sigma(ctx));
  ctx.sigma = {1, 2};
  CHECK_FALSE(check_sigma(ctx));
  ctx.sigma = {1, 0};
  CHECK_FALSE(check_sigma(ctx));

  auto s3 = GradingContext::untwisted(FiniteGroup::symmetric3());
  s3.sigma = index_two_character(s3.group, {0, 4, 5});
  CHECK(check_sigma(s3));
  for (Elem a : s3.group.elements()) CHECK(s3.sig(s3.inv(a)) * s3.sig(a) == 1);
  CHECK_THROWS_AS(index_two_character(s3.group, {0, 1}), Error);
}

TEST_CASE("coset decomposition") {
  auto z2 = FiniteGroup::cyclic(2);
  auto d = coset_decomposition(z2, {0, 1}, {});
  CHECK(d.p() == 1);
  CHECK(d.reps == std::vector<Elem>{0});

  auto z4 = FiniteGroup::cyclic(4);
  auto d4 = coset_decomposition(z4, {0, 2}, {});
  CHECK(d4.reps == std::vector<Elem>{0, 1});
  CHECK(d4.coset_of == std::vector<int>{0, 1, 0, 1});
  CHECK(kind_of([&] { coset_decomposition(z4, {0, 2}, {1}); }) == ErrorKind::NotAUnionOfCosets);
  CHECK(kind_of([&] { coset_decomposition(z4, {0, 1}, {}); }) == ErrorKind::NotASubgroup);

  auto d4b = coset_decomposition(z4, {0, 2}, {1, 3});
  CHECK(d4b.p() == 1);
  CHECK_FALSE(d4b.in_support(1));

  auto s3 = FiniteGroup::symmetric3();
  auto h = s3.generated({1});
  CHECK(h == ElementSet{0, 1});
  auto ds = coset_decomposition(s3, h, {});
  CHECK(ds.p() == 3);
  // every element of the support has a unique (k, beta)
  for (Elem g : s3.elements()) {
    int hits = 0;
    for (int k = 0; k < ds.p(); ++k)
      for (Elem b : h) hits += s3.mul(ds.reps[static_cast<std::size_t>(k)], b) == g;
    CHECK(hits == 1);
  }
}
