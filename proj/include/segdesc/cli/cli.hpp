#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace segdesc::cli {

/// Exit status: 0 success, 1 when the analysis needs a consistent problem
/// (or another precondition fails), 2 for usage and input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int main(int argc, char** argv);

} // namespace segdesc::cli
