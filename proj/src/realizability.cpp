#include "qcent/realizability.hpp"

#include <algorithm>
#include <functional>

#include "qcent/error.hpp"
#include "qcent/lie.hpp"

namespace qcent {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::not_realizable:
      return "not-realizable";
    case Verdict::at_most_one_realizable:
      return "at-most-one-realizable";
    case Verdict::criterion_not_applicable:
      return "criterion-not-applicable";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

Verdict verdict_from_string(const std::string& s) {
  for (Verdict v : {Verdict::not_realizable, Verdict::at_most_one_realizable, Verdict::criterion_not_applicable,
                    Verdict::inconclusive})
    if (to_string(v) == s) return v;
  throw DomainError("unknown verdict \"" + s + "\"");
}

std::string to_string(CdProvenance p) {
  switch (p) {
    case CdProvenance::user_supplied:
      return "user-supplied";
    case CdProvenance::free_group:
      return "free-group";
    case CdProvenance::wreath_formula:
      return "wreath-formula";
    case CdProvenance::power_formula:
      return "power-formula";
  }
  return "user-supplied";
}

CdProvenance provenance_from_string(const std::string& s) {
  for (CdProvenance p : {CdProvenance::user_supplied, CdProvenance::free_group, CdProvenance::wreath_formula,
                         CdProvenance::power_formula})
    if (to_string(p) == s) return p;
  throw DomainError("unknown cd provenance \"" + s + "\"");
}

nlohmann::json CdDescriptor::to_json() const {
  nlohmann::json j;
  j["value"] = value ? nlohmann::json(*value) : nlohmann::json("infinite");
  j["provenance"] = to_string(provenance);
  return j;
}

namespace {

std::uint64_t h1_rank(const Presentation& pres, const SeriesParams& params, const Limits& limits) {
  return second_quotient(pres, params, limits).invariants.size();
}

nlohmann::json optional_json(const std::optional<std::uint64_t>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

VerdictRecord principle_check(const Presentation& first, const Presentation& second, const SeriesParams& params,
                              const Limits& limits, AssertedSide asserted) {
  VerdictRecord rec{"principle", Verdict::inconclusive, nlohmann::json::object()};
  FiniteGroupTable g1 = to_table(third_quotient(first, params, limits), limits);
  FiniteGroupTable g2 = to_table(third_quotient(second, params, limits), limits);
  IsomorphismResult iso = is_isomorphic(g1, g2);
  const std::uint64_t a1 = h1_rank(first, params, limits), a2 = h1_rank(second, params, limits);
  const auto b1 = certified_relation_rank(first, params.p), b2 = certified_relation_rank(second, params.p);

  auto& w = rec.witness;
  w["groups"] = {first.name(), second.name()};
  w["orders"] = {g1.order(), g2.order()};
  w["isomorphic"] = iso.isomorphic;
  if (iso.witness) w["isomorphism_generator_images"] = *iso.witness;
  w["dim_h1"] = {a1, a2};
  w["dim_h2"] = {optional_json(b1), optional_json(b2)};
  if (!iso.isomorphic) return rec;

  std::string differs;
  if (a1 != a2)
    differs = "dim_h1";
  else if (b1 && b2 && *b1 != *b2)
    differs = "dim_h2";
  if (differs.empty()) return rec;
  rec.verdict = Verdict::at_most_one_realizable;
  w["distinguishing_invariant"] = differs;
  if (asserted != AssertedSide::none) {
    const bool first_side = asserted == AssertedSide::first;
    w["asserted_realizable"] = first_side ? first.name() : second.name();
    w["not_realizable"] = first_side ? second.name() : first.name();
  }
  return rec;
}

VerdictRecord relators_in_third_series(const Presentation& pres, const SeriesParams& params, const Limits& limits) {
  VerdictRecord rec{"corollary", Verdict::criterion_not_applicable, nlohmann::json::object()};
  ClassTwoGroup e = universal_class2(pres.generator_count(), params, limits);
  std::vector<ClassTwoElement> gens;
  for (std::size_t i = 0; i < pres.generator_count(); ++i) gens.push_back(e.generator(i));
  bool all_in = true, some_nontrivial = false;
  std::vector<bool> in_series, nontrivial;
  for (const auto& r : pres.relators()) {
    in_series.push_back(evaluate_word(r, gens, e) == e.identity());
    nontrivial.push_back(!is_trivial_in_free(r));
    all_in = all_in && in_series.back();
    some_nontrivial = some_nontrivial || nontrivial.back();
  }
  rec.witness["group"] = pres.name();
  rec.witness["relator_in_third_term"] = in_series;
  rec.witness["relator_nontrivial_in_free_group"] = nontrivial;
  if (all_in && some_nontrivial) rec.verdict = Verdict::not_realizable;
  return rec;
}

VerdictRecord h1_vs_cd_check(std::uint64_t dim_h1, const CdDescriptor& cd, std::int64_t p, bool torsion_free) {
  VerdictRecord rec{"h1-cd", Verdict::criterion_not_applicable, nlohmann::json::object()};
  rec.witness["dim_h1"] = dim_h1;
  rec.witness["cd"] = cd.to_json();
  rec.witness["p"] = p;
  rec.witness["torsion_free"] = torsion_free;
  const bool smaller = !cd.value || dim_h1 < *cd.value;
  const bool gate = p != 2 || torsion_free;
  rec.witness["h1_below_cd"] = smaller;
  if (smaller && gate) rec.verdict = Verdict::not_realizable;
  return rec;
}

namespace {

WordExpr remap(const WordExpr& e, const std::vector<std::size_t>& index) {
  WordExpr out;
  for (const auto& f : e.factors) {
    Factor g = f;
    if (f.kind == Factor::Kind::generator) g.generator = index.at(f.generator);
    g.operands.clear();
    for (const auto& op : f.operands) g.operands.push_back(remap(op, index));
    out.factors.push_back(std::move(g));
  }
  return out;
}

WordExpr single(Factor f) { return WordExpr{{std::move(f)}}; }

void check_spec(const WreathSpec& spec) {
  if (!spec.top_cohomology_finite) throw DomainError("wreath spec: H^n(K) finite flag is missing");
  if (spec.m == 0) throw DomainError("wreath spec: m must be positive");
  if (spec.action.size() != spec.l.group.generator_count())
    throw DomainError("wreath spec: need one permutation per generator of L");
  for (const auto& perm : spec.action) {
    if (perm.size() != spec.m) throw DomainError("wreath spec: permutation length differs from m");
    std::vector<std::size_t> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t c = 0; c < spec.m; ++c)
      if (sorted[c] != c) throw DomainError("wreath spec: action image is not a permutation");
  }
  // transitivity
  std::vector<char> seen(spec.m, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    std::size_t c = stack.back();
    stack.pop_back();
    for (const auto& perm : spec.action)
      if (!seen[perm[c]]) {
        seen[perm[c]] = 1;
        stack.push_back(perm[c]);
      }
  }
  if (std::count(seen.begin(), seen.end(), 1) != static_cast<std::ptrdiff_t>(spec.m))
    throw DomainError("wreath spec: action is not transitive");
  // the permutations must satisfy the relators of L; a word acts as the
  // composite with its last letter applied first
  for (const auto& r : spec.l.group.relators()) {
    std::vector<std::size_t> perm(spec.m);
    for (std::size_t c = 0; c < spec.m; ++c) perm[c] = c;
    for (const auto& letter : r.letters()) {
      std::vector<std::size_t> step = spec.action[letter.generator];
      if (letter.exponent < 0) {
        std::vector<std::size_t> inv(spec.m);
        for (std::size_t c = 0; c < spec.m; ++c) inv[step[c]] = c;
        step = inv;
      }
      const std::int64_t times = letter.exponent < 0 ? -letter.exponent : letter.exponent;
      for (std::int64_t t = 0; t < times; ++t) {
        std::vector<std::size_t> next(spec.m);
        for (std::size_t c = 0; c < spec.m; ++c) next[c] = perm[step[c]];
        perm = next;
      }
    }
    for (std::size_t c = 0; c < spec.m; ++c)
      if (perm[c] != c) throw DomainError("wreath spec: action does not respect the relators of L");
  }
}

}  // namespace

Presentation wreath_model(const WreathSpec& spec) {
  check_spec(spec);
  const Presentation& k = spec.k.group;
  const Presentation& l = spec.l.group;
  const std::size_t nk = k.generator_count(), nl = l.generator_count();
  std::vector<std::string> names;
  auto kgen = [&](std::size_t c, std::size_t i) { return c * nk + i; };
  for (std::size_t c = 0; c < spec.m; ++c)
    for (std::size_t i = 0; i < nk; ++i) names.push_back(k.generator_names()[i] + "c" + std::to_string(c + 1));
  // a clash with these names surfaces as a duplicate generator error
  for (std::size_t i = 0; i < nl; ++i) names.push_back(l.generator_names()[i]);
  const std::size_t lbase = spec.m * nk;

  std::vector<WordExpr> rels;
  for (std::size_t c = 0; c < spec.m; ++c) {
    std::vector<std::size_t> index(nk);
    for (std::size_t i = 0; i < nk; ++i) index[i] = kgen(c, i);
    for (const auto& r : k.relator_exprs()) rels.push_back(remap(r, index));
  }
  for (std::size_t c = 0; c < spec.m; ++c)
    for (std::size_t d = c + 1; d < spec.m; ++d)
      for (std::size_t i = 0; i < nk; ++i)
        for (std::size_t j = 0; j < nk; ++j)
          rels.push_back(single(commutator_factor(single(gen_factor(kgen(c, i))), single(gen_factor(kgen(d, j))))));
  {
    std::vector<std::size_t> index(nl);
    for (std::size_t i = 0; i < nl; ++i) index[i] = lbase + i;
    for (const auto& r : l.relator_exprs()) rels.push_back(remap(r, index));
  }
  // l k_c l^-1 = k_{pi_l(c)}
  for (std::size_t g = 0; g < nl; ++g)
    for (std::size_t c = 0; c < spec.m; ++c)
      for (std::size_t i = 0; i < nk; ++i)
        rels.push_back(WordExpr{{gen_factor(lbase + g), gen_factor(kgen(c, i)), gen_factor(lbase + g, -1),
                                 gen_factor(kgen(spec.action[g][c], i), -1)}});
  std::string name = k.name() + "wr" + l.name();
  return Presentation(name, names, rels);
}

WreathReport wreath_construct(const WreathSpec& spec, const SeriesParams& params, const Limits& limits) {
  check_spec(spec);
  WreathReport out{0, 0, 0, {}, {}, std::nullopt, false, wreath_model(spec), 0, 1, {}};
  out.dim_h1_k = h1_rank(spec.k.group, params, limits);
  out.dim_h1_l = h1_rank(spec.l.group, params, limits);
  out.dim_h1 = out.dim_h1_k + out.dim_h1_l;
  out.cd_power = CdDescriptor{spec.m * spec.k.cd, CdProvenance::power_formula};
  out.cd = CdDescriptor{spec.m * spec.k.cd + spec.l.cd, CdProvenance::wreath_formula};
  if (spec.k.cd > 0) {
    const std::uint64_t n = spec.k.cd;
    out.threshold_m = out.dim_h1 < spec.l.cd ? 1 : (out.dim_h1 - spec.l.cd) / n + 1;
  }
  out.torsion_free = spec.k.torsion_free && spec.l.torsion_free;
  SecondQuotient sq = second_quotient(out.model, params, limits);
  out.model_dim_h1 = sq.invariants.size();
  out.model_order = sq.table.order();
  out.verdict = h1_vs_cd_check(out.dim_h1, out.cd, params.p, out.torsion_free);
  out.verdict.criterion = "wreath";
  out.verdict.witness["m"] = spec.m;
  out.verdict.witness["dim_h1_k"] = out.dim_h1_k;
  out.verdict.witness["dim_h1_l"] = out.dim_h1_l;
  out.verdict.witness["cd_k_power"] = out.cd_power.to_json();
  out.verdict.witness["threshold_m"] = optional_json(out.threshold_m);
  out.verdict.witness["model_dim_h1"] = out.model_dim_h1;
  out.verdict.witness["model_order"] = out.model_order;
  return out;
}

}  // namespace qcent
