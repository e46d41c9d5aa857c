#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wheelset {

/// Batch front end over every public operation. args is argv without the
/// program name; results go to out, diagnostics to err.
///
/// Exit codes: 0 success, 1 oracle disagreement under --oracle, 2 malformed
/// input or usage, 3 degenerate or otherwise out-of-domain input, 4 size
/// bound exceeded.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace wheelset
