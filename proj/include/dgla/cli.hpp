#pragma once

// The command-line surface: fixture-driven certifications with deterministic
// machine reports. Exit codes: 0 every check passed, 1 a mathematical check
// failed or stayed undecided (witness in the report), 2 input error.

#include <string>
#include <vector>

namespace dgla {

struct CliResult {
    int exit_code = 0;
    std::string output;
};

CliResult run_cli(const std::vector<std::string>& args);

}  // namespace dgla
