#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace darx {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  ///< failure context, empty on success
};

struct SelftestOptions {
    int max_order = 10;          ///< randomized numeric checks run to this order
    int symbolic_max_order = 6;  ///< full symbolic identities run to this order
    std::uint64_t seed = 12345;
    int points = 25;  ///< random evaluation points per order
};

/// Runs the whole property suite, logging one line per check, and returns
/// the results. Deterministic for a fixed seed.
std::vector<CheckResult> run_selftest(const SelftestOptions& opt, std::ostream& log);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace darx
