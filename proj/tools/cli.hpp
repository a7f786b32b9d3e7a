#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thermistor::cli {

enum ExitCode : int {
    kSuccess = 0,
    kConfigError = 1,
    kNumericalFailure = 2,
    kNotSteady = 3,
};

/// Entry point of the `thermistor` tool. `args` excludes the program name.
/// Data goes to `out` (or to the files named by --out/--profile); every
/// status, warning and error line goes to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thermistor::cli
