#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "htrans/io.hpp"

namespace htrans {

// A fully-specified CLI invocation. Exactly one input source (builtin,
// input_path, expr) for transform subcommands; per-axis orders for
// multidimensional jobs which accept file input only.
struct JobSpec {
  std::string subcommand;  // zeros fourier laplace laplace-inv mellin mellin-inv demo
  std::vector<int> orders;
  std::string builtin;
  std::string input_path;
  std::string expr;
  bool causal = false;
  std::string compare;  // builtin pair id, with or without "builtin:" prefix
  OutputFormat format = OutputFormat::Csv;
  std::string output_path = "-";  // "-" writes to the out stream
  int example = 0;                // demo: 0 runs all four plus the area probe
  std::string outdir = "demo_out";
  int order_cap = kDefaultOrderCap;
};

// Runs the job, writing artifacts and human-readable lines to `out` and
// diagnostics to `err`. Returns the process exit code: 0 success, 1 usage
// error, 2 numerical failure (non-finite samples, inadmissible order) with a
// node-level message.
int run_job(const JobSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace htrans
