#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tycat::cli {

// args exclude the program name; returns 0 ok, 1 domain error, 2 usage error
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tycat::cli
