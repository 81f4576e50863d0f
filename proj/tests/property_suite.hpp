#pragma once

// Randomized property suites shared by the unit tests and the acceptance
// run. Each suite reports how many of its cases failed and the first failure.

#include <functional>
#include <string>
#include <vector>

#include "qcent/cohom.hpp"
#include "qcent/error.hpp"
#include "qcent/graded.hpp"
#include "qcent/milnor.hpp"
#include "qcent/qcentral.hpp"
#include "support.hpp"

namespace qprop {

using namespace qcent;

struct Outcome {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};


inline constexpr int kCases = 200;

struct RandomGroup {
  Presentation pres;
  std::int64_t q;
  FiniteGroupTable table;
};

inline Presentation random_presentation(std::mt19937_64& g, std::size_t n) {
  std::vector<std::string> names{"x", "y"};
  names.resize(n);
  std::vector<WordExpr> rels;
  int count = static_cast<int>(qtest::uniform(g, 0, 2));
  for (int r = 0; r < count; ++r) {
    WordExpr e;
    int len = static_cast<int>(qtest::uniform(g, 1, 5));
    auto gen = [&] { return static_cast<std::size_t>(qtest::uniform(g, 0, static_cast<std::int64_t>(n) - 1)); };
    for (int i = 0; i < len; ++i) {
      std::int64_t ex = qtest::uniform(g, 1, 4) * (qtest::uniform(g, 0, 1) ? 1 : -1);
      if (n > 1 && qtest::uniform(g, 0, 3) == 0)
        e.factors.push_back(commutator_factor(WordExpr{{gen_factor(gen())}}, WordExpr{{gen_factor(gen())}}, ex));
      else
        e.factors.push_back(gen_factor(gen(), ex));
    }
    rels.push_back(e);
  }
  return Presentation("G", names, rels);
}

// <x, y, z | x^a, y^b, z^c, commutators> with a, b, c in {q, q^2}; three
// generators only for q = 2, where E(3,2) is still small
inline Presentation random_abelian(std::mt19937_64& g, std::size_t& n, std::int64_t q) {
  if (q == 2 && qtest::uniform(g, 0, 1)) n = 3;
  std::vector<std::string> names{"x", "y", "z"};
  names.resize(n);
  std::vector<WordExpr> rels;
  for (std::size_t i = 0; i < n; ++i) rels.push_back(WordExpr{{gen_factor(i, qtest::uniform(g, 0, 1) ? q : q * q)}});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      rels.push_back(WordExpr{{commutator_factor(WordExpr{{gen_factor(i)}}, WordExpr{{gen_factor(j)}})}});
  return Presentation("A", names, rels);
}

// nontrivial third quotients of random presentations with at most `bound`
// elements
inline RandomGroup random_group(std::mt19937_64& g, std::size_t bound) {
  static const std::vector<std::pair<std::size_t, std::int64_t>> shapes{{1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}};
  for (;;) {
    auto [n, q] = shapes[static_cast<std::size_t>(qtest::uniform(g, 0, static_cast<std::int64_t>(shapes.size()) - 1))];
    Presentation p = qtest::uniform(g, 0, 3) == 0 ? random_abelian(g, n, q) : random_presentation(g, n);
    auto c2 = third_quotient(p, SeriesParams::from_q(q));
    if (c2.order() > bound || c2.order() == 1) continue;
    return {p, q, to_table(c2)};
  }
}

inline zq::Vector random_vector(std::mt19937_64& g, const std::vector<std::int64_t>& orders) {
  zq::Vector v(orders.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = qtest::uniform(g, 0, orders[i] - 1);
  return v;
}

inline zq::Vector reduce(zq::Vector v, const std::vector<std::int64_t>& orders) {
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = ((v[i] % orders[i]) + orders[i]) % orders[i];
  return v;
}

inline zq::Vector add(const zq::Vector& a, const zq::Vector& b, const std::vector<std::int64_t>& orders) {
  zq::Vector s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return reduce(s, orders);
}

inline zq::Vector negated(const zq::Vector& a, const std::vector<std::int64_t>& orders) {
  zq::Vector s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = -a[i];
  return reduce(s, orders);
}

inline bool is_zero(const zq::Vector& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

// H^2 basis elements satisfy the cocycle identity
inline Outcome cocycle_identity() {
  Outcome out{"2-cocycle identity on H^2 bases", 0, 0, ""};
  auto g = qtest::rng(101);
  for (int t = 0; t < kCases; ++t, ++out.cases) {
    RandomGroup r = random_group(g, 64);
    std::string where = to_string(r.pres) + " q=" + std::to_string(r.q);
    auto h = h2(r.table, r.q);
    for (const auto& b : h.basis()) out.expect(is_cocycle(r.table, b), where);
    out.expect(h.dimension() >= h1(r.table, r.q).dimension(), where + ": dim H^2 < dim H^1");
  }
  return out;
}

inline Outcome cup_bilinear_commutative() {
  Outcome out{"cup bilinearity and graded commutativity", 0, 0, ""};
  auto g = qtest::rng(102);
  while (out.cases < kCases) {
    RandomGroup r = random_group(g, 64);
    auto one = h1(r.table, r.q);
    if (one.dimension() == 0) continue;
    ++out.cases;
    std::string where = to_string(r.pres) + " q=" + std::to_string(r.q);
    auto two = h2(r.table, r.q);
    const auto& inv = two.invariants();
    Cochain a = one.representative(random_vector(g, one.invariants()));
    Cochain b = one.representative(random_vector(g, one.invariants()));
    Cochain c = one.representative(random_vector(g, one.invariants()));
    auto ab_c = two.coordinates(cup(a + b, c)), a_c = two.coordinates(cup(a, c)), b_c = two.coordinates(cup(b, c));
    auto c_ab = two.coordinates(cup(c, a + b)), c_a = two.coordinates(cup(c, a)), c_b = two.coordinates(cup(c, b));
    auto ab = two.coordinates(cup(a, b)), ba = two.coordinates(cup(b, a));
    if (!(ab_c && a_c && b_c && c_ab && c_a && c_b && ab && ba)) {
      out.expect(false, where + ": a cup product is not a cocycle");
      continue;
    }
    out.expect(*ab_c == add(*a_c, *b_c, inv), where + ": (a+b)c");
    out.expect(*c_ab == add(*c_a, *c_b, inv), where + ": c(a+b)");
    out.expect(*ab == negated(*ba, inv), where + ": ab != -ba");
  }
  return out;
}

inline Outcome inflation_cup() {
  Outcome out{"inflation commutes with cup products", 0, 0, ""};
  auto g = qtest::rng(103);
  while (out.cases < kCases) {
    RandomGroup r = random_group(g, 64);
    // project onto G / [G, G] or G / Z(G), picked at random
    ElementSet n = qtest::uniform(g, 0, 1) ? derived_subgroup(r.table) : center(r.table);
    TableQuotient quo = quotient(r.table, n);
    TableHomomorphism pi{r.table, quo.group, quo.projection};
    auto one = h1(quo.group, r.q);
    if (one.dimension() == 0) continue;
    ++out.cases;
    std::string where = to_string(r.pres) + " q=" + std::to_string(r.q);
    out.expect(pi.is_homomorphism(), where + ": projection");
    Cochain a = one.representative(random_vector(g, one.invariants()));
    Cochain b = one.representative(random_vector(g, one.invariants()));
    Cochain lhs = inflation(pi, cup(a, b));
    Cochain rhs = cup(inflation(pi, a), inflation(pi, b));
    out.expect(lhs == rhs, where + ": cochains differ");
    out.expect(is_cocycle(r.table, inflation(pi, a)), where + ": inflated class not a cocycle");
    auto two = h2(r.table, r.q);
    auto cl = two.coordinates(lhs);
    out.expect(cl.has_value() && cl == two.coordinates(rhs), where + ": classes differ");
  }
  return out;
}

inline Outcome hull_idempotent() {
  Outcome out{"quadratic hull idempotence", 0, 0, ""};
  auto g = qtest::rng(104);
  for (; out.cases < kCases; ++out.cases) {
    std::int64_t q = std::vector<std::int64_t>{2, 3, 4}[static_cast<std::size_t>(qtest::uniform(g, 0, 2))];
    std::size_t m = static_cast<std::size_t>(qtest::uniform(g, 1, 3));
    std::size_t k = static_cast<std::size_t>(qtest::uniform(g, 0, 3));
    GradedAlgebra2 a;
    a.q = q;
    for (std::size_t i = 0; i < m; ++i) a.orders1.push_back(q == 4 && qtest::uniform(g, 0, 1) ? 2 : q);
    for (std::size_t i = 0; i < k; ++i) a.orders2.push_back(q == 4 && qtest::uniform(g, 0, 1) ? 2 : q);
    a.mult.assign(m, std::vector<zq::Vector>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) a.mult[i][j] = random_vector(g, a.orders2);
    auto h = quadratic_hull(a);
    auto hh = quadratic_hull(h);
    std::string where = "q=" + std::to_string(q) + " m=" + std::to_string(m) + " k=" + std::to_string(k);
    out.expect(h.dim2() <= m * m, where);
    out.expect(algebras_equivalent(hh, h), where + ": hull(hull) differs");
  }
  return out;
}

inline Outcome pairing_basis_change() {
  Outcome out{"pairing equivalence under basis change", 0, 0, ""};
  auto g = qtest::rng(105);
  for (; out.cases < kCases; ++out.cases) {
    std::int64_t q = qtest::uniform(g, 0, 1) ? 2 : 3;
    std::size_t m = static_cast<std::size_t>(qtest::uniform(g, 1, 3));
    std::size_t k = static_cast<std::size_t>(qtest::uniform(g, 1, 2));
    std::vector<std::int64_t> o1(m, q), o2(k, q);
    PairingTensor t1{q, o1, o2, std::vector<std::vector<zq::Vector>>(m, std::vector<zq::Vector>(m))};
    for (auto& row : t1.values)
      for (auto& v : row) v = random_vector(g, o2);
    zq::Ring ring(q, 1);
    zq::Matrix a(m, m);
    do {
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) a(i, j) = qtest::uniform(g, 0, q - 1);
    } while (zq::span_length(ring, a) != static_cast<int>(m));
    PairingTensor t2 = t1;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) t2.values[i][j] = t1.evaluate(a.column(i), a.column(j));
    std::string where = "q=" + std::to_string(q) + " m=" + std::to_string(m);
    out.expect(pairings_equivalent(t1, t2), where);
    out.expect(pairings_equivalent(t2, t1), where + " (reversed)");
  }
  return out;
}

inline Outcome steinberg_antisymmetry() {
  Outcome out{"Steinberg and antisymmetry in symbol algebras", 0, 0, ""};
  auto g = qtest::rng(106);
  const std::vector<std::pair<std::string, std::int64_t>> fields{
      {"Fq:5", 2}, {"Fq:9", 2}, {"Fq:7", 3}, {"Fq:13", 4}, {"Fq:25", 4}, {"Fq:49", 3}, {"Qp:3", 2},
      {"Qp:5", 2}, {"Qp:7", 3}, {"Qp:13", 3}, {"Qp:13", 4}, {"Qp:11", 5}, {"R", 2}};
  for (; out.cases < kCases; ++out.cases) {
    const auto& [name, q] = fields[static_cast<std::size_t>(out.cases) % fields.size()];
    auto s = k2(FieldDescriptor::parse(name, SeriesParams::from_q(q)));
    FieldValue a, b;
    if (s.field.kind == FieldKind::finite) {
      std::int64_t size = s.field.parameter;
      a = {qtest::uniform(g, 2, size - 1), 1};
      b = {qtest::uniform(g, 1, size - 1), 1};
    } else {
      for (FieldValue* v : {&a, &b}) {
        std::int64_t num = 0;
        while (num == 0) num = qtest::uniform(g, -500, 500);
        *v = {num, qtest::uniform(g, 1, 300)};
      }
      if (a.num == a.den) a.num += 1;
    }
    std::string where = name + " q=" + std::to_string(q) + " a=" + std::to_string(a.num) + "/" + std::to_string(a.den);
    out.expect(is_zero(symbol(s, a, one_minus(s, a))), where + ": {a,1-a}");
    out.expect(is_zero(symbol(s, a, negate(s, a))), where + ": {a,-a}");
    out.expect(is_zero(add(symbol(s, a, b), symbol(s, b, a), s.k2_invariants)), where + ": {a,b}+{b,a}");
  }
  return out;
}

inline Outcome third_term_trivial() {
  Outcome out{"G^(3) = 1 in computed third quotients", 0, 0, ""};
  auto g = qtest::rng(107);
  for (; out.cases < kCases; ++out.cases) {
    RandomGroup r = random_group(g, 256);
    std::string where = to_string(r.pres) + " q=" + std::to_string(r.q);
    auto params = SeriesParams::from_q(r.q);
    ElementSet s2 = series_step_oracle(r.table, whole_group(r.table), params);
    ElementSet s3 = series_step_oracle(r.table, s2, params);
    out.expect(s3.size() == 1, where + ": G^(3) nontrivial");
    auto cls = nilpotency_class(r.table);
    out.expect(cls.has_value() && *cls <= 2, where + ": class");
    out.expect(static_cast<std::uint64_t>(r.q * r.q) % exponent(r.table) == 0, where + ": exponent");
  }
  return out;
}

inline std::vector<std::function<Outcome()>> all_suites() {
  return {cocycle_identity, cup_bilinear_commutative, inflation_cup, hull_idempotent,
          pairing_basis_change, steinberg_antisymmetry, third_term_trivial};
}

}  // namespace qprop
