#pragma once

#include <ostream>

namespace sptunnel {

// Runs the invariant suites of every module, one pass/fail line per suite.
// Returns true when all pass.
bool run_selftest(std::ostream& out);

}  // namespace sptunnel
