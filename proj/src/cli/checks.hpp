#pragma once

#include <string>
#include <vector>

namespace torusquake::cli {

struct InvariantResult {
    std::string name;
    double max_error;
    double tolerance;
    bool passed;
};

struct SuiteReport {
    std::string suite;
    std::vector<InvariantResult> invariants;

    bool passed() const;
};

const std::vector<std::string>& suite_names();

/// Runs an invariant suite. `perturb` shifts the z-coordinate of every fixture starting point.
SuiteReport run_suite(const std::string& name, double perturb = 0);

/// JSON with stable key order.
std::string report_json(const std::vector<SuiteReport>& reports);

}  // namespace torusquake::cli
