// Acceptance run: one PASS/FAIL line per criterion, with wall time.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "qcent/cli.hpp"
#include "qcent/cohom.hpp"
#include "qcent/error.hpp"
#include "qcent/finite_field.hpp"
#include "qcent/graded.hpp"
#include "qcent/lie.hpp"
#include "qcent/milnor.hpp"
#include "qcent/qcentral.hpp"
#include "qcent/realizability.hpp"
#include "qcent/records.hpp"
#include "property_suite.hpp"
#include "support.hpp"

using namespace qcent;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

// Unitriangular 3x3 matrices over Z/4, multiplied directly.
FiniteGroupTable unitriangular_z4() {
  auto code = [](int a, int b, int c) { return static_cast<Element>(a + 4 * b + 16 * c); };
  std::vector<Element> mult(64 * 64);
  for (int x = 0; x < 64; ++x)
    for (int y = 0; y < 64; ++y) {
      int a = x % 4, b = (x / 4) % 4, c = x / 16;
      int a2 = y % 4, b2 = (y / 4) % 4, c2 = y / 16;
      mult[static_cast<std::size_t>(x * 64 + y)] = code((a + a2) % 4, (b + b2) % 4, (c + c2 + a * b2) % 4);
    }
  return FiniteGroupTable(64, mult, 0, {code(1, 0, 0), code(0, 1, 0)});
}

FiniteGroupTable oracle_third_quotient(const FiniteGroupTable& g, const SeriesParams& params) {
  ElementSet s2 = series_step_oracle(g, whole_group(g), params);
  return quotient(g, series_step_oracle(g, s2, params)).group;
}

std::int64_t naive_finite_k2_order(std::int64_t size, std::int64_t q) {
  GaloisField gf(size);
  auto params = SeriesParams::from_q(q);
  zq::Ring ring(params.p, params.d);
  std::size_t n = static_cast<std::size_t>(size - 1);
  auto at = [n](std::int64_t a, std::int64_t b) { return static_cast<std::size_t>(a - 1) * n + static_cast<std::size_t>(b - 1); };
  std::vector<zq::Vector> rels;
  for (std::int64_t a = 1; a < size; ++a)
    for (std::int64_t a2 = 1; a2 < size; ++a2)
      for (std::int64_t b = 1; b < size; ++b) {
        zq::Vector r(n * n, 0), s(n * n, 0);
        r[at(gf.mul(a, a2), b)] += 1;
        r[at(a, b)] -= 1;
        r[at(a2, b)] -= 1;
        s[at(b, gf.mul(a, a2))] += 1;
        s[at(b, a)] -= 1;
        s[at(b, a2)] -= 1;
        for (auto& x : r) x = ring.reduce(x);
        for (auto& x : s) x = ring.reduce(x);
        rels.push_back(r);
        rels.push_back(s);
      }
  for (std::int64_t a = 2; a < size; ++a) {
    if (gf.sub(1, a) == 0) continue;
    zq::Vector r(n * n, 0);
    r[at(a, gf.sub(1, a))] = 1;
    rels.push_back(r);
  }
  zq::Subquotient m(ring, zq::Matrix::identity(n * n), zq::Matrix::from_columns(n * n, rels));
  return std::accumulate(m.orders().begin(), m.orders().end(), std::int64_t{1}, std::multiplies<>());
}

std::int64_t order_of(const std::vector<std::int64_t>& v) {
  return std::accumulate(v.begin(), v.end(), std::int64_t{1}, std::multiplies<>());
}

int cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  return run_cli(args, out, err);
}

// compare a field's Galois model with its Milnor side; returns (dim H1, dim dec H2)
std::pair<std::size_t, std::size_t> compare_field(const std::string& text, std::int64_t q) {
  auto f = FieldDescriptor::parse(text, SeriesParams::from_q(q));
  auto table = to_table(third_quotient(galois_model(f), f.params));
  auto coh = algebra_from_cohomology(table, q);
  auto mil = algebra_from_milnor(k2(f));
  require(coh.orders1 == mil.orders1, text + ": H1 and k1 differ");
  require(coh.orders2 == mil.orders2, text + ": dec H2 and k2 differ");
  require(algebras_equivalent(coh, mil), text + ": pairings not equivalent");
  require(cli({"--q", std::to_string(q), "compare", text}) == 0, text + ": compare command did not pass");
  return {coh.dim1(), coh.dim2()};
}

void criterion1() {
  auto params = SeriesParams::from_q(2);
  const std::vector<std::string> names{"x", "y", "z"};
  for (std::size_t n = 1; n <= 3; ++n) {
    auto g = third_quotient(free_presentation("F", {names.begin(), names.begin() + static_cast<long>(n)}), params);
    std::size_t expected = std::size_t{1} << (2 * n + n * (n - 1) / 2);
    require(g.order() == expected, "free rank " + std::to_string(n) + " has order " + std::to_string(g.order()));
    auto t = to_table(g);
    auto cls = nilpotency_class(t);
    require(cls && *cls <= 2, "class above 2");
    require(4 % exponent(t) == 0, "exponent does not divide 4");
    if (n > 2) continue;
    ElementSet s2 = series_step_oracle(t, whole_group(t), params);
    require(series_step_oracle(t, s2, params).size() == 1, "series oracle: third term nontrivial");
    require(t.order() / s2.size() == (std::size_t{1} << n), "series oracle: wrong second quotient");
  }
  // independent explicit groups with the same third quotients
  auto c1 = to_table(third_quotient(free_presentation("F", {"x"}), params));
  require(is_isomorphic(c1, oracle_third_quotient(qtest::permutation_group({qtest::cycle_perm(8, 1)}), params)).isomorphic,
          "rank 1 differs from the oracle on Z/8");
  auto c2 = to_table(third_quotient(free_presentation("F", {"x", "y"}), params));
  auto ut = oracle_third_quotient(unitriangular_z4(), params);
  require(ut.order() == 32, "oracle quotient of UT3(Z/4) has order " + std::to_string(ut.order()));
  require(is_isomorphic(c2, ut).isomorphic, "rank 2 differs from the oracle on UT3(Z/4)");
}

void criterion2() {
  require(compare_field("Fq:5", 2) == std::pair<std::size_t, std::size_t>{1, 0}, "F5 dims");
  require(compare_field("Qp:3", 2) == std::pair<std::size_t, std::size_t>{2, 1}, "Q3 dims");
  require(compare_field("R", 2) == std::pair<std::size_t, std::size_t>{1, 1}, "R dims");
  // field-side oracles
  auto p2 = SeriesParams::from_q(2);
  require(naive_finite_k2_order(5, 2) == order_of(k2(FieldDescriptor::parse("Fq:5", p2)).k2_invariants),
          "F5 k2 differs from the naive presentation");
  auto q3 = k2(FieldDescriptor::parse("Qp:3", p2));
  require(symbol(q3, {-1, 1}, {3, 1}) == zq::Vector{1}, "Q3: {-1,3} should be nontrivial");
  require(symbol(q3, {-1, 1}, {-1, 1}) == zq::Vector{0}, "Q3: {-1,-1} should vanish");
  auto r = k2(FieldDescriptor::parse("R", p2));
  require(symbol(r, {-1, 1}, {-1, 1}) == zq::Vector{1}, "R: {-1,-1} should be nontrivial");
}

void criterion3() {
  auto f = FieldDescriptor::parse("Qp:7", SeriesParams::from_q(3));
  auto s = k2(f);
  require(s.k1_basis.size() == 2, "Q7 k1 rank");
  require(order_of(s.k2_invariants) == 3, "Q7 k2 order");
  require(compare_field("Qp:7", 3) == std::pair<std::size_t, std::size_t>{2, 1}, "Q7 dims");
}

void criterion4() {
  auto t = to_table(third_quotient(free_presentation("F", {"x", "y"}), SeriesParams::from_q(2)));
  auto dec = decomposable_h2(t, 2);
  require(dec.h1.dimension() == 2, "H1 of the free quotient");
  require(dec.dimension() == 0, "decomposable H2 is not zero");
  for (const auto& a : dec.h1.basis())
    for (const auto& b : dec.h1.basis()) require(is_coboundary(t, cup(a, b)), "a cup product is not a coboundary");
}

void criterion5() {
  auto params = SeriesParams::from_q(2);
  auto ex = qtest::load("class2.grp");
  auto fr = qtest::load("free2.grp");
  require(relators_in_third_series(ex, params).verdict == Verdict::not_realizable, "corollary verdict");
  auto v = principle_check(ex, fr, params, {}, AssertedSide::second);
  require(v.witness["isomorphic"] == true, "third quotients not isomorphic");
  auto g1 = to_table(third_quotient(ex, params));
  auto g2 = to_table(third_quotient(fr, params));
  auto h = extend_from_generators(g1, g2, v.witness["isomorphism_generator_images"].get<std::vector<Element>>());
  require(h && h->is_isomorphism(), "isomorphism witness does not verify");
  require(relation_rank_free_class2(2) == 2, "Witt count");
  require(certified_relation_rank(ex, 2) == 2u && certified_relation_rank(fr, 2) == 0u, "relation ranks");
  require(v.verdict == Verdict::at_most_one_realizable, "principle verdict " + to_string(v.verdict));
}

void criterion6() {
  auto params = SeriesParams::from_q(2);
  auto spec = [](const char* f) {
    return wreath_spec_from_json(nlohmann::json::parse(qtest::slurp(qtest::data_path(f))));
  };
  auto r2 = wreath_construct(spec("wreath_swap_m2.json"), params);
  require(r2.dim_h1 == 2 && r2.dim_h1_k + r2.dim_h1_l == 2, "dim H1 for m = 2");
  require(r2.model_dim_h1 == 2, "explicit model has dim H1 " + std::to_string(r2.model_dim_h1));
  require(r2.cd.value == 3u, "cd for m = 2");
  require(r2.verdict.verdict == Verdict::not_realizable, "verdict for m = 2");
  auto r1 = wreath_construct(spec("wreath_swap_m1.json"), params);
  require(r1.verdict.verdict == Verdict::criterion_not_applicable, "verdict for m = 1");
}

void criterion7() {
  require(h2(FiniteGroupTable::abelian({2, 2}), 2).dimension() == 3, "H2((Z/2)^2)");
  auto z4 = FiniteGroupTable::cyclic(4);
  require(h2(z4, 2).dimension() == 1, "H2(Z/4, Z/2)");
  auto x = h1(z4, 2).basis().at(0);
  require(is_coboundary(z4, cup(x, x)), "x u x nonzero on Z/4");
  for (std::int64_t q : {2, 3, 4})
    require(h2(FiniteGroupTable::cyclic(static_cast<std::size_t>(q)), q).dimension() == 1,
            "H2(Z/" + std::to_string(q) + ")");
}

void criterion8() {
  for (const auto& suite : qprop::all_suites()) {
    qprop::Outcome o = suite();
    require(o.cases >= qprop::kCases, o.name + ": only " + std::to_string(o.cases) + " cases");
    require(o.failures == 0, o.name + ": " + std::to_string(o.failures) + " failures, first " + o.first_failure);
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<void()> run;
  };
  const std::vector<Criterion> all{
      {1, "free-group third quotients", 5, criterion1},
      {2, "F5, Q3 and R against Milnor K-theory", 30, criterion2},
      {3, "Q7 with q = 3", 10, criterion3},
      {4, "free-group cup products vanish", 10, criterion4},
      {5, "class-two relators", 10, criterion5},
      {6, "wreath products", 5, criterion6},
      {7, "cohomology engine", 30, criterion7},
      {8, "property suites", 60, criterion8},
  };
  int failed = 0;
  for (const auto& c : all) {
    auto start = std::chrono::steady_clock::now();
    std::string why;
    try {
      c.run();
    } catch (const Failure& f) {
      why = f.what;
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (why.empty() && secs > c.limit_seconds) why = "took longer than " + std::to_string(c.limit_seconds) + " s";
    std::printf("%s criterion %d (%s) %.2fs%s%s\n", why.empty() ? "PASS" : "FAIL", c.id, c.title, secs,
                why.empty() ? "" : ": ", why.c_str());
    if (!why.empty()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
