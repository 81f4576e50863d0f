#pragma once

// Criteria showing that a pro-p group is not the maximal pro-p Galois group
// of a field containing the q-th roots of unity.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcent/presentation.hpp"
#include "qcent/qcentral.hpp"

namespace qcent {

enum class Verdict { not_realizable, at_most_one_realizable, criterion_not_applicable, inconclusive };

/// "not-realizable", "at-most-one-realizable", "criterion-not-applicable",
/// "inconclusive".
std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct VerdictRecord {
  std::string criterion;
  Verdict verdict = Verdict::inconclusive;
  nlohmann::json witness = nlohmann::json::object();
};

enum class CdProvenance { user_supplied, free_group, wreath_formula, power_formula };
std::string to_string(CdProvenance p);
CdProvenance provenance_from_string(const std::string& s);

/// A cohomological dimension with where it came from; nullopt value means
/// infinite.
struct CdDescriptor {
  std::optional<std::uint64_t> value;
  CdProvenance provenance = CdProvenance::user_supplied;

  static CdDescriptor infinite(CdProvenance p = CdProvenance::user_supplied) { return {std::nullopt, p}; }
  nlohmann::json to_json() const;
};

/// Which side of a principle check the user asserts to be realizable.
enum class AssertedSide { none, first, second };

/// Isomorphic third quotients with different H^1 or H^2 data. H^2 is known
/// only when certified_relation_rank can certify it.
VerdictRecord principle_check(const Presentation& first, const Presentation& second, const SeriesParams& params,
                              const Limits& limits = {}, AssertedSide asserted = AssertedSide::none);

/// "not-realizable" iff every relator is trivial in E(n,q) and some relator
/// is nontrivial in the free group.
VerdictRecord relators_in_third_series(const Presentation& pres, const SeriesParams& params,
                                       const Limits& limits = {});

/// "not-realizable" iff dim_h1 < cd and (p odd or torsion_free).
VerdictRecord h1_vs_cd_check(std::uint64_t dim_h1, const CdDescriptor& cd, std::int64_t p, bool torsion_free);

struct WreathSide {
  Presentation group;
  std::uint64_t cd = 1;
  bool torsion_free = true;
};

/// G = K^m x| L, L acting on the m coordinates through action[i], the
/// permutation (as images of 0..m-1) attached to generator i of L.
struct WreathSpec {
  WreathSide k;
  /// H^n(K) finite for n = cd(K); required by the cd formula.
  bool top_cohomology_finite = false;
  WreathSide l;
  std::size_t m = 1;
  std::vector<std::vector<std::size_t>> action;
};

struct WreathReport {
  std::uint64_t dim_h1_k = 0;
  std::uint64_t dim_h1_l = 0;
  std::uint64_t dim_h1 = 0;
  CdDescriptor cd_power;  // cd(K^m)
  CdDescriptor cd;        // cd(G)
  /// Least m with dim H^1 < cd for this K and L; nullopt if cd(K) = 0.
  std::optional<std::uint64_t> threshold_m;
  bool torsion_free = false;
  Presentation model;
  /// Rank and order of the second quotient of the explicit model.
  std::uint64_t model_dim_h1 = 0;
  std::uint64_t model_order = 1;
  VerdictRecord verdict;
};

/// Throws DomainError for an intransitive action, an action that ignores the
/// relators of L, or a missing finiteness flag.
WreathReport wreath_construct(const WreathSpec& spec, const SeriesParams& params, const Limits& limits = {});

/// The finite presentation of K^m x| L used as the explicit model.
Presentation wreath_model(const WreathSpec& spec);

}  // namespace qcent
