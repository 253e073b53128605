#pragma once

#include <string>
#include <vector>

namespace stablelattice::cli {

// Exit codes: 0 success, 2 usage error, 3 domain error (including "no fully
// robust matching"), 4 I/O error.
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);  // args without the program name

}  // namespace stablelattice::cli
