#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace starrad::cli {

inline constexpr const char* tool_version = "1.0.0";
inline constexpr int csv_schema_version = 1;

enum ExitCode : int {
    Ok = 0,
    ParameterError = 2,
    ConvergenceFailure = 3,
    Uncertified = 4,
    VerificationFailed = 5,
};

/// Inclusive linear grid "start:stop:count", or a single number.
std::vector<double> parse_range(const std::string& spec);

/// Full command-line entry point; never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace starrad::cli
