#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pushgame::cli {

// Dispatches one invocation. Output is deterministic for identical inputs.
// Exit codes: 0 success/affirmative, 1 negative result (infeasible,
// NotColorable, conflict), 2 input or hypothesis error, 3 oracle size guard.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace pushgame::cli
