#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace absum::cli {

// Dispatches the subcommands (evaluate, fit, verify, lemma, inequality,
// expansion). Exit codes: 0 success/verified, 1 mathematical inconsistency
// or violation, 2 usage error. Output is deterministic for fixed argv.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace absum::cli
