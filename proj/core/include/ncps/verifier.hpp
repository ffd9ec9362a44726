#pragma once

#include <array>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ncps/ncpoly.hpp"

namespace ncps {

/// Aggregated numeric cross-check over every lhs/rhs pair of one check:
/// worst deviation and smallest trusted block encountered.
struct OracleOutcome {
  bool pass = true;
  double max_deviation = 0.0;
  unsigned trusted_dim = 0;
};

struct Check {
  std::string id;
  bool pass = false;
  std::string detail;  // rendered lhs/rhs/difference, set on failure
  std::uint64_t seed = 0;
  std::optional<OracleOutcome> oracle;
};

/// One id per in-scope identity of the derivation chain, in report order.
inline constexpr std::array<const char*, 11> kCheckIds = {
    "eq2",  "eq4",  "eq5-general", "eq6-jacobi",
    "eq7",  "eq8",  "eq9",         "eq10",
    "eq11", "poisson-correspondence", "area-hbar-half"};

struct CheckReport {
  std::uint64_t seed = 0;
  unsigned degree_cap = 0;
  unsigned cases = 0;
  bool with_oracle = false;
  std::vector<Check> checks;

  bool pass() const;
  std::string to_text() const;
  /// { "seed": uint, "checks": [ { "id", "status", "detail"?, "oracle"? } ],
  ///   "pass": bool }
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  unsigned degree_cap = 5;
  unsigned cases = 200;
  bool with_oracle = false;
};

/// Replays the derivation equation by equation over seeded random
/// instances. Failures are recorded, never thrown; every check runs.
/// Requires degree_cap <= 8 and cases >= 1.
CheckReport verify_paper(const VerifyOptions& options);

}  // namespace ncps
