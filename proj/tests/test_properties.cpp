#include <doctest.h>

#include "property_suite.hpp"

namespace {

void run_suite(const qprop::Outcome& o) {
  INFO(o.name << ": " << o.first_failure);
  CHECK(o.cases >= qprop::kCases);
  CHECK(o.failures == 0);
}

}  // namespace

TEST_CASE("2-cocycle identity on H^2 bases") { run_suite(qprop::cocycle_identity()); }
TEST_CASE("cup bilinearity and graded commutativity") { run_suite(qprop::cup_bilinear_commutative()); }
TEST_CASE("inflation commutes with cup products") { run_suite(qprop::inflation_cup()); }
TEST_CASE("quadratic hull idempotence") { run_suite(qprop::hull_idempotent()); }
TEST_CASE("pairing equivalence under basis change") { run_suite(qprop::pairing_basis_change()); }
TEST_CASE("steinberg and antisymmetry") { run_suite(qprop::steinberg_antisymmetry()); }
TEST_CASE("third quotients have trivial third term") { run_suite(qprop::third_term_trivial()); }
