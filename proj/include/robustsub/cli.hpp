#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace robustsub::cli {

// Exit status: 0 success, 1 infeasible parameters or a failed run, 2 usage.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "%.9g"; infinities print as inf / -inf.
std::string format_number(double x);

struct NGrid {
  double start = 0.0;
  double stop = 0.0;
  int points = 0;
};

// "start:stop:points", log-spaced, start and stop inclusive.
NGrid parse_n_grid(const std::string& text);
std::vector<double> expand(const NGrid& grid);

}  // namespace robustsub::cli
