#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace smf::cli {

/// Command-line front end.
///
/// `args` holds the arguments after the program name, in command-line order.
/// Data output goes to `out`, diagnostics to `err`.
///
/// Exit codes: 0 success, 1 usage error (bad flags, bad parameter values,
/// I/O failure), 2 domain error (a requested quantity is undefined at the
/// given inputs, e.g. rex where delta < 0).
[[nodiscard]] int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace smf::cli
