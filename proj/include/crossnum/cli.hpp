#pragma once

#include <ostream>

namespace crossnum::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kBadArgs = 2,
    kCheckFailed = 3,
    kResource = 4,
};

/// Entry point shared by the crossnum binary and the integration tests.
/// Payloads go to `out`, diagnostics to `err`; files named by --out are
/// written only after the command has fully succeeded or finished checking.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace crossnum::cli
