#pragma once

// Oracle checks run by `crackmono selftest`.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crackmono/forward_solver.hpp"
#include "crackmono/geometry.hpp"

namespace crackmono {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SelftestInput {
    std::string arc = "gamma1";
    SolverConfig solver;
    std::uint64_t seed = 0;
    // Matrix checked for reciprocity; computed from arc/solver when absent.
    std::optional<FarFieldMatrix> far_field;
};

std::vector<CheckResult> run_selftest(const SelftestInput& input);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace crackmono
