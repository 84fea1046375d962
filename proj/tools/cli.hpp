#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lieforge::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kInputError = 2 };

/// Runs `lie-forge` with `args` (program name excluded). JSON reports go to
/// `out`, human-readable summaries and diagnostics to `err`. The default
/// sampling seed comes from LIE_FORGE_SEED when set.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lieforge::cli
