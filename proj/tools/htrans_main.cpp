#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "htrans/job.hpp"

namespace {

htrans::OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return htrans::OutputFormat::Csv;
  if (name == "json") return htrans::OutputFormat::Json;
  throw CLI::ValidationError("--format must be csv or json");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Discrete Fourier, two-sided Laplace, Bromwich-inversion and Mellin\n"
      "transforms built from the Hermite-zero eigenvector matrix."};
  app.require_subcommand(1);

  htrans::JobSpec spec;
  std::string format = "csv";

  if (const char* cap = std::getenv("HTRANS_ORDER_CAP")) {
    try {
      spec.order_cap = std::stoi(cap);
    } catch (...) {
      std::cerr << "error: HTRANS_ORDER_CAP is not an integer\n";
      return 1;
    }
  }

  const auto add_common = [&](CLI::App* sub, bool transform) {
    sub->add_option("-N,--order", spec.orders,
                    transform ? "grid order, or per-axis list like 3,4" : "grid order")
        ->delimiter(',')
        ->required();
    sub->add_option("-o,--output", spec.output_path, "output file, - for stdout");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    if (transform) {
      sub->add_option("--builtin", spec.builtin, "builtin pair id (ex1..ex4) as input");
      sub->add_option("--input", spec.input_path, "sample file (csv or json) as input");
      sub->add_option("--expr", spec.expr, "expression in t (or x) as input");
      sub->add_option("--compare", spec.compare,
                      "print the relative L2 error against a builtin pair");
    }
  };

  add_common(app.add_subcommand("zeros", "emit the Hermite zeros of the given order"), false);
  auto* fourier = app.add_subcommand("fourier", "Fourier quadrature at the grid frequencies");
  auto* laplace = app.add_subcommand("laplace", "two-sided Laplace transform at s = i w_k");
  auto* laplace_inv =
      app.add_subcommand("laplace-inv", "Bromwich inversion along the imaginary axis");
  auto* mellin = app.add_subcommand("mellin", "Mellin transform via x = exp(-t)");
  auto* mellin_inv =
      app.add_subcommand("mellin-inv", "inverse Mellin; returns f(exp(-t)) on the t grid");
  for (auto* sub : {fourier, laplace, laplace_inv, mellin, mellin_inv})
    add_common(sub, true);
  for (auto* sub : {fourier, laplace})
    sub->add_flag("--causal", spec.causal, "zero-fill samples at negative nodes");

  auto* demo = app.add_subcommand(
      "demo", "reproduce the published experiments and print a pass/fail table");
  demo->add_option("--example", spec.example, "run one experiment (1..4) instead of all");
  demo->add_option("-N,--order", spec.orders, "override the experiment's grid order")
      ->delimiter(',');
  demo->add_option("--outdir", spec.outdir, "directory for the plot-ready data files");
  demo->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  CLI11_PARSE(app, argc, argv);

  spec.subcommand = app.get_subcommands().front()->get_name();
  spec.format = parse_format(format);
  return htrans::run_job(spec, std::cout, std::cerr);
}
