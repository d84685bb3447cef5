#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hyperhull::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidArgs = 2,
  kBound = 3,
  kSelfCheck = 4,
};

struct Environment {
  /// Value of HYPERHULL_MAX_N, if set.
  std::optional<std::string> max_n;
};

Environment environment_from_process();

/// Runs one command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = {});

}  // namespace hyperhull::cli
