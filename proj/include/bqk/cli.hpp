#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bqk {

// args excludes the program name. Exit codes: 0 success, 1 validation or
// axiom failure, 2 I/O or format error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bqk
