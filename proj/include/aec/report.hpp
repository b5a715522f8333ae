#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "aec/dsl.hpp"
#include "aec/generate.hpp"

namespace aec {

using Json = nlohmann::ordered_json;

struct RunOptions {
    std::uint64_t seed = 0;
    long long budget = 200000;  // enumeration budget for pullback materialization
    int lambda = 1;             // topology parameter
    bool timings = false;       // wall-clock block; off by default to keep reports byte-stable
    std::string target;         // restrict to one named entity; empty = every applicable one
    int member = 0;             // base-point index for types/topology
    std::vector<std::string> names;  // index names for types/topology and expand constants
    std::string axiom;          // for check: ap|jep|lrp|gap|trp|grp|cip
    std::string law = "trp-grp";  // for harness
    int seeds = 50;             // instance count for harness
    GenProfile profile;         // for generate
};

struct RunResult {
    Json report;
    int exit_code = 0;  // 0 ok, 1 verdict false, 2 input error, 3 budget exceeded
};

/// Dispatch one workbench command over a parsed workspace. Never throws:
/// input problems become an error object with exit code 2, budget overruns 3.
RunResult run_command(const Workspace& ws, const std::string& command, const RunOptions& opt);

/// Condensed human-readable rendering of a report.
std::string render_text(const Json& report);

}  // namespace aec
