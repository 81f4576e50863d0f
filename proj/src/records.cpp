#include "qcent/records.hpp"

#include "qcent/error.hpp"

namespace qcent {

using nlohmann::json;

std::string to_string(const ClassTwoElement& u, const ClassTwoGroup& g, const std::vector<std::string>& names) {
  g.check(u);
  auto name = [&](std::size_t i) { return i < names.size() ? names[i] : "x" + std::to_string(i + 1); };
  std::string out;
  auto append = [&](const std::string& base, std::int64_t e) {
    if (e == 0) return;
    if (!out.empty()) out += " ";
    out += base;
    if (e != 1) out += "^" + std::to_string(e);
  };
  for (std::size_t i = 0; i < g.rank(); ++i) append(name(i), u.a[i]);
  for (std::size_t i = 0; i < g.rank(); ++i)
    for (std::size_t j = i + 1; j < g.rank(); ++j) append("[" + name(j) + "," + name(i) + "]", u.c[g.pair_index(i, j)]);
  return out.empty() ? "1" : out;
}

GroupRecord group_record(const ClassTwoGroup& g, const std::vector<std::string>& names, const Limits& limits) {
  FiniteGroupTable t = to_table(g, limits);
  GroupRecord r;
  r.order = t.order();
  r.exponent = exponent(t);
  r.nilpotency_class = nilpotency_class(t);
  r.abelian_invariants = abelian_invariants(t);
  r.generators = names;
  for (const auto& k : g.kernel_basis()) r.kernel_basis.push_back(to_string(k, g, names));
  return r;
}

GroupRecord group_record(const SecondQuotient& g, const std::vector<std::string>& names) {
  GroupRecord r;
  r.order = g.table.order();
  r.exponent = exponent(g.table);
  r.nilpotency_class = nilpotency_class(g.table);
  r.abelian_invariants = abelian_invariants(g.table);
  r.generators = names;
  for (const auto& v : g.relator_vectors) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    r.kernel_basis.push_back(s + ")");
  }
  return r;
}

CohomologyRecord cohomology_record(const CohomologySpace& h) {
  return CohomologyRecord{h.degree(), h.modulus(), h.dimension(), h.invariants(), h.basis_support_size()};
}

CohomologyRecord cohomology_record(const DecomposableH2& dec) {
  std::uint64_t support = 0;
  for (const auto& b : dec.basis) support += b.support_size();
  return CohomologyRecord{2, dec.modulus, dec.dimension(), dec.invariants, support};
}

json to_json(const GroupRecord& r) {
  json j;
  j["order"] = r.order;
  j["exponent"] = r.exponent;
  j["class"] = r.nilpotency_class ? json(*r.nilpotency_class) : json(nullptr);
  j["abelian_invariants"] = r.abelian_invariants;
  j["generators"] = r.generators;
  j["kernel_basis"] = r.kernel_basis;
  return j;
}

GroupRecord group_record_from_json(const json& j) {
  GroupRecord r;
  r.order = j.at("order").get<std::uint64_t>();
  r.exponent = j.at("exponent").get<std::uint64_t>();
  if (!j.at("class").is_null()) r.nilpotency_class = j.at("class").get<int>();
  r.abelian_invariants = j.at("abelian_invariants").get<std::vector<std::int64_t>>();
  r.generators = j.at("generators").get<std::vector<std::string>>();
  r.kernel_basis = j.at("kernel_basis").get<std::vector<std::string>>();
  return r;
}

json to_json(const CohomologyRecord& r) {
  return json{{"degree", r.degree},
              {"modulus", r.modulus},
              {"dimension", r.dimension},
              {"invariants", r.invariants},
              {"basis_support_size", r.basis_support_size}};
}

CohomologyRecord cohomology_record_from_json(const json& j) {
  return CohomologyRecord{j.at("degree").get<int>(), j.at("modulus").get<std::int64_t>(),
                          j.at("dimension").get<std::uint64_t>(),
                          j.at("invariants").get<std::vector<std::int64_t>>(),
                          j.at("basis_support_size").get<std::uint64_t>()};
}

json to_json(const PairingTensor& t) {
  return json{{"modulus", t.modulus},
              {"m", t.m()},
              {"target_dim", t.target_dim()},
              {"source_orders", t.source_orders},
              {"target_orders", t.target_orders},
              {"values", t.values}};
}

PairingTensor pairing_from_json(const json& j) {
  PairingTensor t{j.at("modulus").get<std::int64_t>(), j.at("source_orders").get<std::vector<std::int64_t>>(),
                  j.at("target_orders").get<std::vector<std::int64_t>>(),
                  j.at("values").get<std::vector<std::vector<zq::Vector>>>()};
  t.check();
  return t;
}

json to_json(const GradedAlgebra2& a) {
  return json{{"q", a.q},       {"dim1", a.dim1()},      {"dim2", a.dim2()},
              {"mult", a.mult}, {"orders1", a.orders1}, {"orders2", a.orders2}};
}

GradedAlgebra2 graded_from_json(const json& j) {
  GradedAlgebra2 a;
  a.q = j.at("q").get<std::int64_t>();
  a.mult = j.at("mult").get<std::vector<std::vector<zq::Vector>>>();
  const auto d1 = j.at("dim1").get<std::size_t>(), d2 = j.at("dim2").get<std::size_t>();
  a.orders1 = j.contains("orders1") ? j.at("orders1").get<std::vector<std::int64_t>>()
                                    : std::vector<std::int64_t>(d1, a.q);
  a.orders2 = j.contains("orders2") ? j.at("orders2").get<std::vector<std::int64_t>>()
                                    : std::vector<std::int64_t>(d2, a.q);
  if (a.dim1() != d1 || a.dim2() != d2) throw DomainError("graded record: dimensions disagree with orders");
  a.check();
  return a;
}

json to_json(const VerdictRecord& v) {
  return json{{"criterion", v.criterion}, {"verdict", to_string(v.verdict)}, {"witness", v.witness}};
}

VerdictRecord verdict_from_json(const json& j) {
  return VerdictRecord{j.at("criterion").get<std::string>(), verdict_from_string(j.at("verdict").get<std::string>()),
                       j.at("witness")};
}

WreathSpec wreath_spec_from_json(const json& j) {
  try {
    const json& k = j.at("K");
    const json& l = j.at("L");
    WreathSpec s{WreathSide{parse_presentation(k.at("presentation").get<std::string>()), k.at("cd").get<std::uint64_t>(),
                            k.value("torsion_free", false)},
                 k.value("top_cohomology_finite", false),
                 WreathSide{parse_presentation(l.at("presentation").get<std::string>()), l.at("cd").get<std::uint64_t>(),
                            l.value("torsion_free", false)},
                 j.at("m").get<std::size_t>(),
                 j.at("action").get<std::vector<std::vector<std::size_t>>>()};
    return s;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed wreath spec: ") + e.what());
  }
}

json to_json(const WreathSpec& s) {
  return json{{"K",
               {{"presentation", to_string(s.k.group)},
                {"cd", s.k.cd},
                {"torsion_free", s.k.torsion_free},
                {"top_cohomology_finite", s.top_cohomology_finite}}},
              {"L", {{"presentation", to_string(s.l.group)}, {"cd", s.l.cd}, {"torsion_free", s.l.torsion_free}}},
              {"m", s.m},
              {"action", s.action}};
}

json to_json(const WreathReport& r) {
  return json{{"dim_h1_K", r.dim_h1_k},
              {"dim_h1_L", r.dim_h1_l},
              {"dim_h1", r.dim_h1},
              {"cd_K_power", r.cd_power.to_json()},
              {"cd", r.cd.to_json()},
              {"threshold_m", r.threshold_m ? json(*r.threshold_m) : json(nullptr)},
              {"torsion_free", r.torsion_free},
              {"model", to_string(r.model)},
              {"model_dim_h1", r.model_dim_h1},
              {"model_order", r.model_order},
              {"verdict", to_json(r.verdict)}};
}

}  // namespace qcent
