#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hhiv::cli {

inline constexpr std::string_view kVersion = "0.1.0";

enum ExitCode : int {
    kSuccess = 0,
    kNegative = 1,     // verification negative / certificate violation
    kConfigError = 2,  // config, flag or expression error
    kComputeError = 3,
};

/// Entry point behind the `hhiv` binary: `hhiv <enclose|verify|certify|sweep>
/// [--config PATH | PATH | -] [--tol X] [--grid N] [--out PATH] [--pretty]`.
/// A config path of "-" reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hhiv::cli
