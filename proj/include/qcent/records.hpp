#pragma once

// JSON records emitted by the command line tool. Every record converts both
// ways so that reports can be read back.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcent/cohom.hpp"
#include "qcent/graded.hpp"
#include "qcent/presentation.hpp"
#include "qcent/qcentral.hpp"
#include "qcent/realizability.hpp"

namespace qcent {

struct GroupRecord {
  std::uint64_t order = 1;
  std::uint64_t exponent = 1;
  std::optional<int> nilpotency_class;
  std::vector<std::int64_t> abelian_invariants;
  std::vector<std::string> generators;
  /// Normal forms of the kernel generators in E(n,q) (level 3) or relator
  /// exponent vectors (level 2).
  std::vector<std::string> kernel_basis;

  bool operator==(const GroupRecord&) const = default;
};

struct CohomologyRecord {
  int degree = 1;
  std::int64_t modulus = 2;
  std::uint64_t dimension = 0;
  std::vector<std::int64_t> invariants;
  std::uint64_t basis_support_size = 0;

  bool operator==(const CohomologyRecord&) const = default;
};

/// x^2 y [y,x]^1 style rendering of a normal form; "1" for the identity.
std::string to_string(const ClassTwoElement& u, const ClassTwoGroup& g, const std::vector<std::string>& names);

GroupRecord group_record(const ClassTwoGroup& g, const std::vector<std::string>& names, const Limits& limits = {});
GroupRecord group_record(const SecondQuotient& g, const std::vector<std::string>& names);
CohomologyRecord cohomology_record(const CohomologySpace& h);
CohomologyRecord cohomology_record(const DecomposableH2& dec);

nlohmann::json to_json(const GroupRecord& r);
GroupRecord group_record_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CohomologyRecord& r);
CohomologyRecord cohomology_record_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PairingTensor& t);
PairingTensor pairing_from_json(const nlohmann::json& j);
/// {q, dim1, dim2, mult}, plus the cyclic orders of both degrees.
nlohmann::json to_json(const GradedAlgebra2& a);
GradedAlgebra2 graded_from_json(const nlohmann::json& j);
nlohmann::json to_json(const VerdictRecord& v);
VerdictRecord verdict_from_json(const nlohmann::json& j);

/// {"K": {"presentation", "cd", "torsion_free", "top_cohomology_finite"},
///  "L": {"presentation", "cd", "torsion_free"}, "m", "action"}.
WreathSpec wreath_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const WreathSpec& s);
nlohmann::json to_json(const WreathReport& r);

}  // namespace qcent
