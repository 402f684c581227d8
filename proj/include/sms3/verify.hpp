#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sms3/types.hpp"

namespace sms3 {

struct CheckResult {
  std::string name;
  bool ok;
  std::string detail;  // empty on success
};

// Module invariant suites at their configured scales.  Valid names: core,
// group, enumeration, poset, cg, all.  Throws UsageError on other names.
std::vector<CheckResult> verify_suite(const std::string& suite);

bool all_ok(const std::vector<CheckResult>& results);

// Deterministic pseudo-random upshifted sextuples with coefficient sum
// between 0 and max_rho, for sampling-style checks.
std::vector<Vec6> random_upshifted(int count, unsigned max_rho, std::uint64_t seed);

// Path-number sum over the shifted representative, extended over every
// integer shift; used to check representative independence.
Int path_number_from_representative(const Vec6& representative);

}  // namespace sms3
