#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gband {

// One named, reproducible check. Each item pairs an observed number with its
// bound or target; the margin is signed so that >= 0 means the item passes,
// and the check passes iff every margin does. `runtime_seconds` is for
// console display only and is never serialized (reports must be byte-stable).
struct CheckReport {
    std::string check_name;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<std::string> labels;
    std::vector<double> observed;
    std::vector<double> bound_or_target;
    std::vector<double> margin;
    bool pass = false;
    std::string worst;  // label of the smallest margin, for diagnosis
    double runtime_seconds = 0.0;
};

struct VerifySettings {
    uint64_t seed = 42;
};

// Names of all checks, sorted; run_check throws std::invalid_argument for an
// unknown name.
std::vector<std::string> check_names();
CheckReport run_check(const std::string& name, const VerifySettings& settings);
std::vector<CheckReport> run_checks(const std::vector<std::string>& names,
                                    const VerifySettings& settings);
std::vector<CheckReport> run_all(const VerifySettings& settings);

bool all_pass(const std::vector<CheckReport>& reports);

// JSON array sorted by check_name with stable key order; excludes runtime.
std::string reports_to_json(std::vector<CheckReport> reports);

}  // namespace gband
