#include "qcent/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "qcent/cohom.hpp"
#include "qcent/error.hpp"
#include "qcent/graded.hpp"
#include "qcent/milnor.hpp"
#include "qcent/qcentral.hpp"
#include "qcent/realizability.hpp"
#include "qcent/records.hpp"

namespace qcent {

namespace {

using nlohmann::json;

struct RunConfig {
  std::int64_t q = 2;
  int level = 3;
  std::size_t order_bound = 512;
  std::size_t h2_bound = 64;
  std::string output = "text";
  std::uint64_t seed = 0;

  SeriesParams params() const { return SeriesParams::from_q(q); }
  Limits limits() const { return Limits{order_bound, h2_bound}; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Presentation load_group(const std::string& path, const std::string& name) {
  std::vector<Presentation> all = parse_presentations(read_file(path));
  if (name.empty()) {
    if (all.size() != 1) throw DomainError(path + " holds " + std::to_string(all.size()) + " groups; name one");
    return all.front();
  }
  for (const auto& p : all)
    if (p.name() == name) return p;
  throw DomainError("no group " + name + " in " + path);
}

std::string join(const std::vector<std::int64_t>& v) {
  if (v.empty()) return "(none)";
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string join(const std::vector<std::string>& v) {
  if (v.empty()) return "(none)";
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s;
}

void print_tensor(std::ostream& out, const PairingTensor& t) {
  out << "pairing " << t.m() << " x " << t.m() << " -> target orders " << join(t.target_orders) << "\n";
  for (std::size_t i = 0; i < t.m(); ++i) {
    out << " ";
    for (std::size_t j = 0; j < t.m(); ++j) {
      out << " (";
      for (std::size_t k = 0; k < t.values[i][j].size(); ++k) out << (k ? "," : "") << t.values[i][j][k];
      out << ")";
    }
    out << "\n";
  }
}

void print_cohomology(std::ostream& out, const std::string& label, const CohomologyRecord& r) {
  out << label << " dim " << r.dimension << "  invariants " << join(r.invariants) << "\n";
}

int cmd_quotient(const RunConfig& cfg, const std::string& file, const std::string& group, std::ostream& out) {
  Presentation pres = load_group(file, group);
  if (cfg.level != 2 && cfg.level != 3) throw DomainError("--level must be 2 or 3");
  GroupRecord rec = cfg.level == 3
                        ? group_record(third_quotient(pres, cfg.params(), cfg.limits()), pres.generator_names(), cfg.limits())
                        : group_record(second_quotient(pres, cfg.params(), cfg.limits()), pres.generator_names());
  if (cfg.output == "json") {
    json j = to_json(rec);
    j["group"] = pres.name();
    j["level"] = cfg.level;
    j["q"] = cfg.q;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "group " << pres.name() << "  level " << cfg.level << "  q " << cfg.q << "\n";
  out << "order " << rec.order << "\n";
  out << "exponent " << rec.exponent << "\n";
  out << "class " << (rec.nilpotency_class ? std::to_string(*rec.nilpotency_class) : "not nilpotent") << "\n";
  out << "abelian invariants " << join(rec.abelian_invariants) << "\n";
  out << "kernel basis " << join(rec.kernel_basis) << "\n";
  return 0;
}

int cmd_cohomology(const RunConfig& cfg, const std::string& file, const std::string& group, std::ostream& out) {
  Presentation pres = load_group(file, group);
  FiniteGroupTable g = to_table(third_quotient(pres, cfg.params(), cfg.limits()), cfg.limits());
  DecomposableH2 dec = decomposable_h2(g, cfg.q, cfg.h2_bound, cfg.order_bound);
  std::optional<CohomologyRecord> full;
  if (g.order() <= cfg.h2_bound) full = cohomology_record(h2(g, cfg.q, cfg.h2_bound));
  CohomologyRecord one = cohomology_record(dec.h1);
  CohomologyRecord decr = cohomology_record(dec);
  PairingTensor t = pairing_gram(dec);
  if (cfg.output == "json") {
    json j{{"group", pres.name()},
           {"q", cfg.q},
           {"order", g.order()},
           {"h1", to_json(one)},
           {"h2", full ? to_json(*full) : json(nullptr)},
           {"decomposable_h2", to_json(decr)},
           {"pairing", to_json(t)}};
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "group " << pres.name() << "  third quotient of order " << g.order() << "  q " << cfg.q << "\n";
  print_cohomology(out, "H1", one);
  if (full)
    print_cohomology(out, "H2", *full);
  else
    out << "H2 not computed (order above --h2-bound " << cfg.h2_bound << ")\n";
  print_cohomology(out, "H2 decomposable", decr);
  print_tensor(out, t);
  return 0;
}

int cmd_milnor(const RunConfig& cfg, const std::string& field_text, std::ostream& out) {
  FieldDescriptor f = FieldDescriptor::parse(field_text, cfg.params());
  SymbolAlgebra s = k2(f);
  PairingTensor t = milnor_pairing_gram(s);
  if (cfg.output == "json") {
    json j{{"field", f.to_string()},  {"q", cfg.q},
           {"k1_basis", s.k1_basis},  {"k1_orders", s.k1_orders},
           {"k2_invariants", s.k2_invariants}, {"pairing", to_json(t)}};
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "field " << f.to_string() << "  q " << cfg.q << "\n";
  out << "k1 rank " << s.k1_basis.size() << "  basis " << join(s.k1_basis) << "  orders " << join(s.k1_orders) << "\n";
  if (s.k2_invariants.empty())
    out << "k2 trivial\n";
  else
    out << "k2 invariants " << join(s.k2_invariants) << "\n";
  print_tensor(out, t);
  return 0;
}

int cmd_compare(const RunConfig& cfg, const std::string& field_text, std::ostream& out) {
  FieldDescriptor f = FieldDescriptor::parse(field_text, cfg.params());
  Presentation model = galois_model(f);
  FiniteGroupTable g = to_table(third_quotient(model, cfg.params(), cfg.limits()), cfg.limits());
  GradedAlgebra2 coh = algebra_from_cohomology(g, cfg.q, cfg.order_bound);
  GradedAlgebra2 mil = algebra_from_milnor(k2(f));
  const bool dims = coh.orders1 == mil.orders1 && coh.orders2 == mil.orders2;
  const bool equivalent = dims && algebras_equivalent(coh, mil);
  const std::string result = equivalent ? "THEOREM-A-CONSISTENT" : "INCONSISTENT";
  if (cfg.output == "json") {
    json j{{"field", f.to_string()},
           {"q", cfg.q},
           {"model", to_string(model)},
           {"third_quotient_order", g.order()},
           {"cohomology", to_json(coh)},
           {"milnor", to_json(mil)},
           {"pairings_equivalent", equivalent},
           {"result", result}};
    out << j.dump(2) << "\n";
  } else {
    out << "field " << f.to_string() << "  q " << cfg.q << "  model " << model.name() << "  |G^[3]| = " << g.order()
        << "\n";
    out << "cohomology (H1, dec H2) = (" << coh.dim1() << ", " << coh.dim2() << ")\n";
    out << "milnor     (k1, k2)     = (" << mil.dim1() << ", " << mil.dim2() << ")\n";
    if (!dims) out << "dimensions differ\n";
    if (dims && !equivalent) out << "pairings are not equivalent\n";
    out << result << "\n";
  }
  return equivalent ? 0 : 2;
}

struct CheckOptions {
  std::string criterion = "all";
  std::string against;
  std::string against_group;
  std::string cd;
  bool torsion_free = false;
  std::string assert_realizable = "none";
};

bool finding(const VerdictRecord& v) {
  return v.verdict == Verdict::not_realizable || v.verdict == Verdict::at_most_one_realizable;
}

void print_verdicts(std::ostream& out, const std::vector<VerdictRecord>& vs) {
  for (const auto& v : vs) out << v.criterion << ": " << to_string(v.verdict) << "\n";
}

int cmd_check(const RunConfig& cfg, const CheckOptions& opt, const std::string& file, const std::string& group,
              std::ostream& out) {
  const std::string& c = opt.criterion;
  if (c != "all" && c != "corollary" && c != "principle" && c != "h1-cd" && c != "wreath")
    throw DomainError("--criterion must be all, corollary, principle, h1-cd or wreath");
  std::vector<VerdictRecord> verdicts;
  json extra = json::object();

  if (c == "wreath") {
    json spec_json;
    try {
      spec_json = json::parse(read_file(file));
    } catch (const json::parse_error& e) {
      throw DomainError(std::string("malformed wreath spec: ") + e.what());
    }
    WreathReport report = wreath_construct(wreath_spec_from_json(spec_json), cfg.params(), cfg.limits());
    verdicts.push_back(report.verdict);
    extra["report"] = to_json(report);
    if (cfg.output != "json") {
      out << "dim H1 = " << report.dim_h1_k << " + " << report.dim_h1_l << " = " << report.dim_h1 << "\n";
      out << "cd = " << *report.cd.value << " (" << to_string(report.cd.provenance) << ")\n";
      if (report.threshold_m) out << "dim H1 < cd from m = " << *report.threshold_m << "\n";
      out << "model second quotient order " << report.model_order << "\n";
    }
  } else {
    Presentation pres = load_group(file, group);
    extra["group"] = pres.name();
    if (c == "all" || c == "corollary") verdicts.push_back(relators_in_third_series(pres, cfg.params(), cfg.limits()));
    if (c == "all" || c == "principle") {
      AssertedSide side = AssertedSide::none;
      if (opt.assert_realizable == "first")
        side = AssertedSide::first;
      else if (opt.assert_realizable == "second")
        side = AssertedSide::second;
      else if (opt.assert_realizable != "none")
        throw DomainError("--assert-realizable must be none, first or second");
      std::optional<Presentation> other;
      if (!opt.against.empty()) {
        other = load_group(opt.against, opt.against_group);
      } else {
        // Free pro-p groups are realizable, so the comparison with the free
        // group of the same rank asserts that side.
        other = free_presentation("Free" + std::to_string(pres.generator_count()), pres.generator_names());
        if (side == AssertedSide::none) side = AssertedSide::second;
      }
      verdicts.push_back(principle_check(pres, *other, cfg.params(), cfg.limits(), side));
    }
    if (c == "h1-cd" || (c == "all" && !opt.cd.empty())) {
      if (opt.cd.empty()) throw DomainError("criterion h1-cd needs --cd");
      CdDescriptor cd;
      if (opt.cd == "inf" || opt.cd == "infinite") {
        cd = CdDescriptor::infinite();
      } else {
        if (opt.cd.find_first_not_of("0123456789") != std::string::npos) throw DomainError("--cd must be an integer or inf");
        cd = CdDescriptor{std::stoull(opt.cd), CdProvenance::user_supplied};
      }
      std::uint64_t dim = second_quotient(pres, cfg.params(), cfg.limits()).invariants.size();
      verdicts.push_back(h1_vs_cd_check(dim, cd, cfg.params().p, opt.torsion_free));
    }
  }

  if (cfg.output == "json") {
    json j = extra;
    j["verdicts"] = json::array();
    for (const auto& v : verdicts) j["verdicts"].push_back(to_json(v));
    out << j.dump(2) << "\n";
  } else {
    print_verdicts(out, verdicts);
  }
  for (const auto& v : verdicts)
    if (finding(v)) return 0;
  return 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Third q-central quotients, their cohomology, and Milnor K-theory mod q"};
  app.name("qcent");
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--q", cfg.q, "prime power modulus")->capture_default_str();
  app.add_option("--level", cfg.level, "quotient level, 2 or 3")->capture_default_str();
  app.add_option("--order-bound", cfg.order_bound, "largest group order to enumerate")->capture_default_str();
  app.add_option("--h2-bound", cfg.h2_bound, "largest group order for full H^2")->capture_default_str();
  app.add_option("--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized runs")->capture_default_str();

  std::string file, group, field;
  auto* quotient = app.add_subcommand("quotient", "order, class, exponent and invariants of G^[level]");
  quotient->add_option("file", file, "presentation file")->required();
  quotient->add_option("group", group, "group name when the file holds several");
  auto* cohomology = app.add_subcommand("cohomology", "H^1, H^2 and decomposable H^2 of G^[3]");
  cohomology->add_option("file", file, "presentation file")->required();
  cohomology->add_option("group", group, "group name when the file holds several");
  auto* milnor = app.add_subcommand("milnor", "k1 and k2 of a field mod q");
  milnor->add_option("field", field, "Fq:<size>, Qp:<l> or R")->required();
  auto* compare = app.add_subcommand("compare", "Galois model cohomology against Milnor K-theory");
  compare->add_option("field", field, "Fq:<size>, Qp:<l> or R")->required();
  CheckOptions opt;
  auto* check = app.add_subcommand("check", "realizability criteria");
  check->add_option("file", file, "presentation file, or a JSON spec for --criterion wreath")->required();
  check->add_option("group", group, "group name when the file holds several");
  check->add_option("--criterion", opt.criterion, "all, corollary, principle, h1-cd or wreath")->capture_default_str();
  check->add_option("--against", opt.against, "presentation file for the principle comparison");
  check->add_option("--against-group", opt.against_group, "group name in the --against file");
  check->add_option("--cd", opt.cd, "cohomological dimension (integer or inf) for h1-cd");
  check->add_flag("--torsion-free", opt.torsion_free, "assert that the group is torsion-free");
  check->add_option("--assert-realizable", opt.assert_realizable, "none, first or second")->capture_default_str();
  for (auto* sub : {quotient, cohomology, milnor, compare, check}) sub->fallthrough();

  std::vector<const char*> argv{"qcent"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cfg.order_bound == 0 || cfg.h2_bound == 0) throw DomainError("bounds must be positive");
    (void)cfg.params();
    if (*quotient) return cmd_quotient(cfg, file, group, out);
    if (*cohomology) return cmd_cohomology(cfg, file, group, out);
    if (*milnor) return cmd_milnor(cfg, field, out);
    if (*compare) return cmd_compare(cfg, field, out);
    if (*check) return cmd_check(cfg, opt, file, group, out);
  } catch (const ParseError& e) {
    err << "qcent: parse error at " << e.what() << "\n";
    return 1;
  } catch (const SizeError& e) {
    err << "qcent: size limit: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "qcent: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace qcent
