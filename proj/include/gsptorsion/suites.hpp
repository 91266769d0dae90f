#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gsptorsion/json_io.hpp"

namespace gspt {

struct RunConfig {
    std::uint64_t seed = 1;
    int trials = 0;  // 0 selects the suite default
    int budget_log2 = 34;
    int bound = 6;   // grid bound for the Abel-transform suite
};

struct CheckRecord {
    std::string id;
    std::string anchor;
    Json inputs;
    Json expected;
    Json observed;
    Json corridor;  // null when the check is an exact comparison
    bool pass = false;
};

struct VerificationReport {
    std::string suite;
    Json config;
    std::vector<CheckRecord> checks;
    Json extra = Json::object();  // suite-specific statistics

    std::size_t failed() const;
    bool passed() const { return failed() == 0; }
    Json to_json() const;
};

/// Canonical suite names, in the order they are listed by the CLI.
const std::vector<std::string>& suite_names();
/// Maps accepted aliases onto canonical names; throws InvalidArgument.
std::string canonical_suite_name(const std::string& name);

VerificationReport run_suite(const std::string& name, const RunConfig& config);

}  // namespace gspt
