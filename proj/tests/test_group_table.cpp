#include <doctest.h>

#include <array>

#include "qcent/error.hpp"
#include "qcent/group_table.hpp"
#include "support.hpp"

using namespace qcent;

namespace {

// S3 as permutations of {0,1,2}, elements encoded by their index in `perms`
FiniteGroupTable symmetric3() {
  std::vector<std::array<int, 3>> perms{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<Element> mult(36);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      for (std::size_t k = 0; k < 6; ++k)
        if (perms[k] == c) mult[a * 6 + b] = static_cast<Element>(k);
    }
  return FiniteGroupTable(6, mult, 0, {1, 2});
}

}  // namespace

TEST_CASE("cyclic and abelian tables") {
  auto c4 = FiniteGroupTable::cyclic(4);
  CHECK(c4.is_associative());
  CHECK(exponent(c4) == 4);
  CHECK(nilpotency_class(c4) == 1);
  auto v = FiniteGroupTable::abelian({2, 2});
  CHECK(v.order() == 4);
  CHECK(exponent(v) == 2);
  CHECK(abelian_invariants(v) == std::vector<std::int64_t>{2, 2});
  CHECK(abelian_invariants(FiniteGroupTable::abelian({4, 2, 3})) == std::vector<std::int64_t>{2, 3, 4});
  CHECK(nilpotency_class(FiniteGroupTable::trivial()) == 0);
}

TEST_CASE("a non-nilpotent group") {
  auto s3 = symmetric3();
  CHECK(s3.is_associative());
  CHECK(!nilpotency_class(s3).has_value());
  CHECK(derived_subgroup(s3).size() == 3);
  CHECK(center(s3).size() == 1);
  CHECK(abelian_invariants(s3) == std::vector<std::int64_t>{2});
  auto q = quotient(s3, derived_subgroup(s3));
  CHECK(q.group.order() == 2);
}

TEST_CASE("bad tables are rejected") {
  std::vector<Element> mult{0, 1, 1, 1};
  CHECK_THROWS_AS(FiniteGroupTable(2, mult, 0, {1}), Error);
  CHECK_THROWS_AS(FiniteGroupTable(4, FiniteGroupTable::cyclic(4).table(), 0, {2}), Error);
}

TEST_CASE("isomorphism search") {
  auto c4 = FiniteGroupTable::cyclic(4);
  auto v4 = FiniteGroupTable::abelian({2, 2});
  CHECK(!is_isomorphic(c4, v4).isomorphic);
  auto c6 = FiniteGroupTable::cyclic(6);
  auto c2c3 = FiniteGroupTable::abelian({2, 3});
  auto r = is_isomorphic(c6, c2c3);
  REQUIRE(r.isomorphic);
  auto h = extend_from_generators(c6, c2c3, *r.witness);
  REQUIRE(h.has_value());
  CHECK(h->is_isomorphism());
  CHECK(!is_isomorphic(c6, symmetric3()).isomorphic);
  CHECK(is_isomorphic(symmetric3(), symmetric3()).isomorphic);
}

TEST_CASE("homomorphisms extend only when relations hold") {
  auto c4 = FiniteGroupTable::cyclic(4);
  auto c2 = FiniteGroupTable::cyclic(2);
  CHECK(extend_from_generators(c4, c2, {1}).has_value());
  CHECK(!extend_from_generators(c2, c4, {1}).has_value());
  auto id = identity_homomorphism(c4);
  auto h = *extend_from_generators(c4, c2, {1});
  CHECK(compose(h, id).images == h.images);
  CHECK(h.is_surjective());
  CHECK(!h.is_injective());
}
