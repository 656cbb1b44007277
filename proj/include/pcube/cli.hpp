#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcube::cli {

// Exit statuses shared by every subcommand.
inline constexpr int kTrue = 0;   // verdict true, labeling found, command succeeded
inline constexpr int kFalse = 1;  // verdict false, no labeling
inline constexpr int kError = 2;  // usage, parse or precondition error

// Runs one command line (args[0] is the program name). Standard input is
// read from `in` whenever a path argument is "-" or omitted.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pcube::cli
