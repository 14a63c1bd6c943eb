#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ipword {

// Runs one CLI invocation. Returns the process exit code: 0 on success and
// verified outcomes, 1 on falsified certificates / negated --expect queries,
// 2 on usage errors. All reports are byte-deterministic for equal argv.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ipword
