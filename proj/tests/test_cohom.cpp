#include <doctest.h>

#include <set>

#include "qcent/cohom.hpp"
#include "qcent/error.hpp"
#include "qcent/qcentral.hpp"
#include "support.hpp"

using namespace qcent;

namespace {

std::int64_t ipow(std::int64_t b, std::size_t e) {
  std::int64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::int64_t module_order(const std::vector<std::int64_t>& inv) {
  std::int64_t r = 1;
  for (auto o : inv) r *= o;
  return r;
}

// |Hom(G, Z/q)| by trying every assignment on the generators
std::int64_t brute_h1_order(const FiniteGroupTable& g, std::int64_t q) {
  std::size_t k = g.generators().size();
  std::int64_t count = 0;
  for (std::int64_t code = 0; code < ipow(q, k); ++code) {
    std::vector<std::int64_t> v(k);
    std::int64_t c = code;
    for (auto& x : v) {
      x = c % q;
      c /= q;
    }
    // a homomorphism to Z/q is a map into the cyclic group of order q
    auto target = FiniteGroupTable::cyclic(static_cast<std::size_t>(q));
    std::vector<Element> imgs(v.begin(), v.end());
    if (extend_from_generators(g, target, imgs)) ++count;
  }
  return count;
}

// |H^2(G, Z/q)| from all normalized 2-cochains and all 1-cochains
std::int64_t brute_h2_order(const FiniteGroupTable& g, std::int64_t q) {
  std::size_t n = g.order();
  std::vector<std::size_t> cells;
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = 1; b < n; ++b) cells.push_back(a * n + b);
  std::int64_t cocycles = 0;
  Cochain c = zero_cochain(g, 2, q);
  for (std::int64_t code = 0; code < ipow(q, cells.size()); ++code) {
    std::int64_t k = code;
    for (auto cell : cells) {
      c.values[cell] = k % q;
      k /= q;
    }
    if (is_cocycle(g, c)) ++cocycles;
  }
  std::set<std::vector<std::int64_t>> boundaries;
  Cochain phi = zero_cochain(g, 1, q);
  for (std::int64_t code = 0; code < ipow(q, n - 1); ++code) {
    std::int64_t k = code;
    for (std::size_t a = 1; a < n; ++a) {
      phi.values[a] = k % q;
      k /= q;
    }
    boundaries.insert(coboundary(g, phi).values);
  }
  return cocycles / static_cast<std::int64_t>(boundaries.size());
}

FiniteGroupTable e22() { return to_table(third_quotient(free_presentation("F", {"x", "y"}), SeriesParams::from_q(2))); }

}  // namespace

TEST_CASE("H^1 and H^2 orders against brute force") {
  struct Small {
    FiniteGroupTable g;
    std::int64_t q;
  };
  std::vector<Small> cases{{FiniteGroupTable::cyclic(2), 2}, {FiniteGroupTable::cyclic(3), 3},
                           {FiniteGroupTable::cyclic(4), 2}, {FiniteGroupTable::cyclic(4), 4},
                           {FiniteGroupTable::abelian({2, 2}), 2}, {FiniteGroupTable::cyclic(2), 4},
                           {FiniteGroupTable::trivial(), 2}};
  for (const auto& c : cases) {
    CAPTURE(c.g.order());
    CAPTURE(c.q);
    CHECK(module_order(h1(c.g, c.q).invariants()) == brute_h1_order(c.g, c.q));
    CHECK(module_order(h2(c.g, c.q).invariants()) == brute_h2_order(c.g, c.q));
  }
}

TEST_CASE("H^1 against brute force on class-two groups") {
  auto g = e22();
  CHECK(module_order(h1(g, 2).invariants()) == brute_h1_order(g, 2));
  CHECK(module_order(h1(g, 4).invariants()) == brute_h1_order(g, 4));
}

TEST_CASE("elementary abelian groups") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto g = FiniteGroupTable::abelian(std::vector<std::int64_t>(n, 2));
    CHECK(h1(g, 2).dimension() == n);
    CHECK(h2(g, 2).dimension() == n * (n + 1) / 2);
    CHECK(decomposable_h2(g, 2).dimension() == n * (n + 1) / 2);
  }
  auto g3 = FiniteGroupTable::abelian({3, 3});
  CHECK(h2(g3, 3).dimension() == 3);
  // squares vanish for odd p, so only x u y survives
  CHECK(decomposable_h2(g3, 3).dimension() == 1);
}

TEST_CASE("cyclic groups") {
  auto z4 = FiniteGroupTable::cyclic(4);
  auto h = h1(z4, 2);
  REQUIRE(h.dimension() == 1);
  Cochain x = h.basis()[0];
  CHECK(is_coboundary(z4, cup(x, x)));
  CHECK(decomposable_h2(z4, 2).dimension() == 0);
  auto z2 = FiniteGroupTable::cyclic(2);
  auto y = h1(z2, 2).basis()[0];
  CHECK(!is_coboundary(z2, cup(y, y)));
  for (std::int64_t q : {2, 3, 4}) CHECK(h2(FiniteGroupTable::cyclic(static_cast<std::size_t>(q)), q).dimension() == 1);
  CHECK(h2(FiniteGroupTable::cyclic(4), 4).invariants() == std::vector<std::int64_t>{4});
}

TEST_CASE("representatives, coordinates and witnesses") {
  auto g = e22();
  auto h = h2(g, 2);
  CHECK(h.dimension() == 5);
  auto gen = qtest::rng(31);
  for (int t = 0; t < 20; ++t) {
    zq::Vector coords(h.dimension());
    for (auto& c : coords) c = qtest::uniform(gen, 0, 1);
    Cochain rep = h.representative(coords);
    CHECK(is_cocycle(g, rep));
    Cochain phi = zero_cochain(g, 1, 2);
    for (std::size_t a = 1; a < g.order(); ++a) phi.values[a] = qtest::uniform(gen, 0, 1);
    Cochain moved = rep + coboundary(g, phi);
    REQUIRE(h.coordinates(moved).has_value());
    CHECK(*h.coordinates(moved) == coords);
    auto w = coboundary_witness(g, coboundary(g, phi));
    REQUIRE(w.has_value());
    CHECK(coboundary(g, *w) == coboundary(g, phi));
  }
  Cochain bad = zero_cochain(g, 2, 2);
  bad.values[1 * g.order() + 2] = 1;
  CHECK(!h.coordinates(bad).has_value());
  CHECK(!is_cocycle(g, bad));
}

TEST_CASE("free class-two quotient has no decomposable H^2") {
  auto g = e22();
  auto dec = decomposable_h2(g, 2);
  CHECK(dec.h1.dimension() == 2);
  CHECK(dec.dimension() == 0);
  for (const auto& a : dec.h1.basis())
    for (const auto& b : dec.h1.basis()) CHECK(is_coboundary(g, cup(a, b)));
}

TEST_CASE("order bounds") {
  auto g = e22();
  CHECK_THROWS_AS(h2(g, 2, 16), SizeError);
  CHECK_NOTHROW(decomposable_h2(g, 2, 16, 64));
  CHECK_THROWS_AS(decomposable_h2(g, 2, 16, 16), SizeError);
}

TEST_CASE("pairing tensors and their equivalence") {
  PairingTensor hyper{2, {2, 2}, {2}, {{{0}, {1}}, {{1}, {0}}}};
  PairingTensor squares{2, {2, 2}, {2}, {{{1}, {0}}, {{0}, {1}}}};
  PairingTensor mixed{2, {2, 2}, {2}, {{{1}, {1}}, {{1}, {0}}}};
  hyper.check();
  CHECK(pairings_equivalent(hyper, hyper));
  CHECK(!pairings_equivalent(hyper, squares));
  // y -> x + y turns mixed into the diagonal form
  CHECK(pairings_equivalent(mixed, squares));
  CHECK(!pairings_equivalent(hyper, mixed));
  PairingTensor other_mod{4, {4}, {4}, {{{1}}}};
  CHECK_THROWS_AS(pairings_equivalent(hyper, other_mod), DomainError);
  PairingTensor big{2, {2, 2, 2, 2, 2}, {}, std::vector<std::vector<zq::Vector>>(5, std::vector<zq::Vector>(5))};
  CHECK_THROWS_AS(pairings_equivalent(big, big), DomainError);
  CHECK(hyper.evaluate({1, 1}, {1, 0}) == zq::Vector{1});
}

TEST_CASE("gram of the free quotient and of Z/2") {
  auto t = pairing_gram(FiniteGroupTable::cyclic(2), 2);
  CHECK(t.values[0][0] == zq::Vector{1});
  auto f = pairing_gram(e22(), 2);
  CHECK(f.target_dim() == 0);
  CHECK(f.m() == 2);
}

TEST_CASE("inflation from Z/2 to Z/4") {
  auto z4 = FiniteGroupTable::cyclic(4);
  auto z2 = FiniteGroupTable::cyclic(2);
  TableHomomorphism pi{z4, z2, {0, 1, 0, 1}};
  auto x = h1(z2, 2).basis()[0];
  auto fx = inflation(pi, x);
  CHECK(is_cocycle(z4, fx));
  CHECK(h1(z4, 2).coordinates(fx) == zq::Vector{1});
  CHECK(is_coboundary(z4, inflation(pi, cup(x, x))));
  auto maps = induced_h_maps(pi, 2);
  CHECK(maps.degree1_bijective);
  CHECK(maps.degree2_decomposable.cols() == 1);
  CHECK(!maps.degree2_bijective);
  TableHomomorphism bad{z4, z2, {0, 1, 1, 1}};
  CHECK_THROWS_AS(inflation(bad, x), DomainError);
}

TEST_CASE("cochain arithmetic") {
  auto z2 = FiniteGroupTable::cyclic(2);
  auto z3 = FiniteGroupTable::cyclic(3);
  CHECK_THROWS_AS(zero_cochain(z2, 1, 2) + zero_cochain(z3, 1, 2), DomainError);
  CHECK_THROWS_AS(zero_cochain(z2, 1, 2) + zero_cochain(z2, 1, 4), DomainError);
  CHECK_THROWS_AS(zero_cochain(z2, 3, 2), DomainError);
  auto x = h1(z3, 3).basis()[0];
  CHECK(scale(x, 3) == zero_cochain(z3, 1, 3));
  CHECK(cup(x, x).support_size() > 0);
}
