#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "springerkit/partition.hpp"

namespace springerkit {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  std::optional<std::string> counterexample;  // offending flag or value
};

/// Outcome of a verification suite. Finite-field suites establish claims
/// over F_q only.
struct Report {
  std::string suite;
  std::vector<CheckResult> checks;
  nlohmann::json data = nlohmann::json::object();

  void add(std::string name, bool passed, std::string detail = {},
           std::optional<std::string> counterexample = std::nullopt);
  bool passed() const;
  nlohmann::json to_json() const;
};

/// Strata of isotropic x-stable flags for x in sp_6 of type (2,2,1,1):
/// cover, label inclusions, disjointness of the two line strata, the
/// intersection of the plane strata, and the swap by an involution h.
Report verify_sp6(std::uint32_t q);

/// For flags whose domino label ends with d_{n2,k2} after the first l1
/// columns of `shape`: x^l1(V_{n-m2}) = V_{m2}, V_{n-m2} = (x^l1)^{-1}(V_{m2})
/// and Im x^{l1+1} <= V_{m2} <= ker x & Im x^l1, with m2 = n2/2.
Report verify_concatenation(const Partition& shape, FormKind kind, int l1, std::uint32_t q);

/// Duality, admissibility and juxtaposition properties for all partitions
/// of size <= max_n.
Report verify_partition_props(int max_n);

/// The syt_label fibers of the x-stable flags of the standard nilpotent of
/// type p are all nonempty and there are as many as standard tableaux.
Report verify_syt_strata(const Partition& p, std::uint32_t q);

}  // namespace springerkit
