#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopfcyc::cli {

// Runs the command line tool; returns the process exit code.
int run(int argc, char** argv);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopfcyc::cli
