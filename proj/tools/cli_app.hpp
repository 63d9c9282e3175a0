#pragma once

#include <ostream>
#include <span>
#include <string>

namespace uavlink::cli {

enum ExitCode : int {
    kOk = 0,
    kConfigError = 1,
    kModelError = 2,
};

/// Entry point behind the `uavlink` executable. `args` excludes the
/// program name. CSV goes to `out` when `--out -`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace uavlink::cli
