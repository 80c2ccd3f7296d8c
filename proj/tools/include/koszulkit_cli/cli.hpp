#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace koszulkit::cli {

// Exit statuses of the command-line tool.
inline constexpr int kOk = 0;
inline constexpr int kNotKoszul = 1;
inline constexpr int kFailure = 2;

// args excludes the program name. "-" as an input path reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace koszulkit::cli
