#pragma once

#include <iosfwd>

namespace nrt {

/// Runs the command line tool. Returns 0 on success or a passing suite, 1 on
/// a failing suite, 2 on usage and parse errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nrt
