#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace veer::cli {

enum ExitCode { kComputed = 0, kPropertyViolated = 1, kUsage = 2, kAborted = 3 };

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace veer::cli
