#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tempconn {

/// Runs one command line (without the program name) and returns the exit
/// code: 0 yes/success, 1 negative answer, 2 usage, parse or resource error.
/// `in` serves `--input -`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace tempconn
