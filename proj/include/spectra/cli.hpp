#pragma once

// Command-line front end over the library: compute weight sets, export
// plot-ready interval data, print structural statistics, verify against the
// independent oracle, and print the exact reference constants.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spectra/exact.hpp"
#include "spectra/spectrum.hpp"

namespace spectra {

struct RunConfig {
  std::string command;
  int k = 2;
  long long q = 100;
  Kind kind = Kind::lagrange;
  std::string format = "csv";      // csv | json
  int digits = 12;                 // decimal rendering precision
  std::optional<std::string> cache_dir;
  int maxlen = 6;                  // verify: net period bound
  long long max_shift_edges = 4000000;  // pre-flight |C|^2 * k budget
  bool inject_error = false;       // verify: corrupt weights, expect failure
};

// Named exact constants for one alphabet bound: the two extreme tail
// values, the all-ones and all-k periodic values with their heights, and
// the height of the alternating (1,k) period.
struct ConstantRow {
  std::string name;
  Surd value;
};

std::vector<ConstantRow> constants_table(int k);

// Weights fattened to [w - 1/q, w + 1/q] and merged while overlapping;
// endpoints stay exact until rendering.
struct PlotInterval {
  Surd lo, hi;
};

std::vector<PlotInterval> merge_plot_intervals(const std::vector<Surd>& weights,
                                               long long q);

// Full CLI: parses argv, runs one command, writes results to out and
// diagnostics to err.  Returns the process exit code: 0 success, 1
// verification failure, 2 usage or domain error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace spectra
