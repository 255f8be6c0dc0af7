#pragma once

#include <ostream>

namespace twoway::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kInputError = 2, kGuardExceeded = 3 };

// Entry point shared by the `twoway` binary and the CLI tests. Results go to
// `out`; failures are reported on `err` as {"error": {"kind", "message"}}.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace twoway::cli
