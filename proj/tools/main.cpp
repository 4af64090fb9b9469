// setmeter: batch measurement of set sizes at explicit scales.
//
// Subcommands: measure, dim, compare, algebra, infinity, check. All output
// is a JSON report on stdout (or --out); errors become a JSON error object
// on stderr and a non-zero exit status.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "setmeter/commands.hpp"
#include "setmeter/error.hpp"
#include "setmeter/mvalue.hpp"

namespace {

struct CliOptions {
  setmeter::RunConfig config;
  std::string scale_text;
  std::string sweep_text;
  std::string graduation_text;
  std::string delimiter_text = ",";
  std::string out_path;
  std::string expression;
};

void apply_parsed_options(CliOptions& options) {
  using namespace setmeter;
  if (!options.scale_text.empty()) {
    options.config.scale = parse_rational(options.scale_text);
  }
  if (!options.sweep_text.empty()) {
    const std::size_t first = options.sweep_text.find(':');
    const std::size_t second = options.sweep_text.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos) {
      fail(errc::invalid_config,
           "--sweep expects r0:s:k, e.g. 1/3:1/3:12");
    }
    SweepSpec sweep;
    sweep.start = parse_rational(options.sweep_text.substr(0, first));
    sweep.factor =
        parse_rational(options.sweep_text.substr(first + 1, second - first - 1));
    try {
      sweep.steps = std::stoi(options.sweep_text.substr(second + 1));
    } catch (const std::exception&) {
      fail(errc::invalid_config,
           "bad step count in --sweep '" + options.sweep_text + "'");
    }
    options.config.sweep = sweep;
  }
  if (!options.graduation_text.empty()) {
    options.config.graduation = parse_mvalue(options.graduation_text);
  }
  if (options.delimiter_text.size() != 1) {
    fail(errc::invalid_config, "--delimiter expects a single character");
  }
  options.config.delimiter = options.delimiter_text[0];
}

void emit(const std::string& report, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << report;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    setmeter::fail(setmeter::errc::invalid_config,
                   "cannot write '" + out_path + "'");
  }
  out << report;
}

void add_scale_options(CLI::App* cmd, CliOptions& options) {
  cmd->add_option("--scale", options.scale_text, "Measurement scale p/q");
  cmd->add_option("--sweep", options.sweep_text,
                  "Geometric scale sweep r0:s:k (scales r0*s^i, i < k)");
}

void add_input_options(CLI::App* cmd, CliOptions& options) {
  cmd->add_option("input", options.config.input, "CSV point file");
  cmd->add_option("--preset", options.config.preset,
                  "IFS preset: cantor or sierpinski");
  cmd->add_option("--delimiter", options.delimiter_text, "CSV delimiter");
  cmd->add_flag("--header", options.config.header, "Skip a CSV header row");
  cmd->add_option("--workers", options.config.workers,
                  "Worker threads for grid counting");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Measurement of set sizes: size pairs (r, N(r)), box-counting "
               "dimension, outer-measure checks and symbolic infinities"};
  app.require_subcommand(1);

  CliOptions options;

  CLI::App* measure = app.add_subcommand(
      "measure", "Count grid-cover elements at the requested scales");
  add_input_options(measure, options);
  add_scale_options(measure, options);
  measure->add_option("--graduation", options.graduation_text,
                      "Graduation g >= 1; reports ceil(N/g)");

  CLI::App* dim = app.add_subcommand(
      "dim", "Estimate box-counting dimension over a scale sweep");
  add_input_options(dim, options);
  add_scale_options(dim, options);

  CLI::App* compare = app.add_subcommand(
      "compare", "Compare graduation-1 counts of two point files");
  compare->add_option("input", options.config.input, "First CSV point file")
      ->required();
  compare->add_option("input_b", options.config.input_b, "Second CSV point file")
      ->required();
  compare->add_option("--delimiter", options.delimiter_text, "CSV delimiter");
  compare->add_flag("--header", options.config.header, "Skip a CSV header row");
  compare->add_option("--workers", options.config.workers,
                      "Worker threads for grid counting");
  compare->add_option("--scale", options.scale_text,
                      "Also report per-scale counts at p/q");

  CLI::App* algebra = app.add_subcommand(
      "algebra", "Evaluate a pair/value expression, e.g. \"(1/2,3)+(1/2,4)\"");
  algebra->add_option("expression", options.expression, "Expression")
      ->required();

  CLI::App* infinity = app.add_subcommand(
      "infinity", "Dimension sequence of the infinities and the CH record");
  infinity->add_option("-n,--terms", options.config.sequence_length,
                       "Number of sequence terms");

  CLI::App* check = app.add_subcommand(
      "check", "Run the outer-measure property checkers on seeded instances");
  check->add_option("--seed", options.config.seed, "Generator seed");
  check->add_option("--trials", options.config.trials,
                    "Instances per property");

  for (CLI::App* cmd : {measure, dim, compare, algebra, infinity, check}) {
    cmd->add_option("--out", options.out_path, "Write the report to a file");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    apply_parsed_options(options);
    std::string report;
    int status = 0;
    if (app.got_subcommand(measure)) {
      report = setmeter::cmd_measure(options.config);
    } else if (app.got_subcommand(dim)) {
      report = setmeter::cmd_dim(options.config);
    } else if (app.got_subcommand(compare)) {
      report = setmeter::cmd_compare(options.config);
    } else if (app.got_subcommand(algebra)) {
      report = setmeter::cmd_algebra(options.expression);
    } else if (app.got_subcommand(infinity)) {
      report = setmeter::cmd_infinity(options.config);
    } else {
      const setmeter::CheckOutcome outcome = setmeter::cmd_check(options.config);
      report = outcome.report;
      status = outcome.all_passed ? 0 : 2;
    }
    emit(report, options.out_path);
    return status;
  } catch (const setmeter::Error& e) {
    std::cerr << setmeter::error_report(setmeter::errc_name(e.code()), e.what());
    return 1;
  } catch (const std::exception& e) {
    std::cerr << setmeter::error_report("internal", e.what());
    return 1;
  }
}
