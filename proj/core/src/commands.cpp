#include "setmeter/commands.hpp"

#include <json.hpp>

#include "setmeter/algebra.hpp"
#include "setmeter/cardinal.hpp"
#include "setmeter/cover.hpp"
#include "setmeter/csv.hpp"
#include "setmeter/dimension_fit.hpp"
#include "setmeter/error.hpp"
#include "setmeter/measure_checks.hpp"
#include "setmeter/set_model.hpp"

namespace setmeter {

namespace {

using nlohmann::json;

std::string dump(const json& report) { return report.dump(2) + "\n"; }

SetModel load_model(const RunConfig& config) {
  const bool has_file = !config.input.empty();
  const bool has_preset = !config.preset.empty();
  if (has_file == has_preset) {
    fail(errc::invalid_config, "provide exactly one of an input file or a preset");
  }
  if (has_preset) return ifs_preset(config.preset);
  return SetModel(read_points_csv(
      config.input, CsvOptions{config.delimiter, config.header}));
}

json input_json(const RunConfig& config) {
  if (!config.preset.empty()) {
    return json{{"kind", "preset"}, {"name", config.preset}};
  }
  return json{{"kind", "csv"}, {"path", config.input}};
}

std::vector<Rational> requested_scales(const RunConfig& config) {
  std::vector<Rational> scales;
  if (config.scale) {
    if (*config.scale <= 0) fail(errc::invalid_config, "scale must be positive");
    scales.push_back(*config.scale);
  }
  if (config.sweep) {
    const SweepSpec& sweep = *config.sweep;
    if (sweep.start <= 0) fail(errc::invalid_config, "sweep start must be positive");
    if (sweep.factor <= 0 || sweep.factor >= 1) {
      fail(errc::invalid_config, "sweep factor must lie in (0, 1)");
    }
    if (sweep.steps < 1) fail(errc::invalid_config, "sweep needs >= 1 steps");
    Rational r = sweep.start;
    for (int i = 0; i < sweep.steps; ++i) {
      scales.push_back(r);
      r *= sweep.factor;
    }
  }
  if (scales.empty()) {
    fail(errc::invalid_config, "provide --scale or --sweep");
  }
  return scales;
}

BigInt finite_graduation(const MValue& graduation) {
  if (!graduation.is_finite()) {
    fail(errc::invalid_config,
         "graduation must be a finite value >= 1 for the ceiling rule, got " +
             graduation.to_text());
  }
  const BigInt& g = graduation.finite_value();
  if (g < 1) fail(errc::invalid_config, "graduation must be >= 1");
  return g;
}

int checked_workers(const RunConfig& config) {
  if (config.workers < 1) fail(errc::invalid_config, "workers must be >= 1");
  return config.workers;
}

}  // namespace

std::string cmd_measure(const RunConfig& config) {
  const SetModel model = load_model(config);
  const BigInt graduation = finite_graduation(config.graduation);
  const int workers = checked_workers(config);

  json results = json::array();
  for (const Rational& r : requested_scales(config)) {
    const SizePair pair = measure_size(model, r, workers);
    const BigInt& n = pair.count.finite_value();
    results.push_back(json{{"scale", to_text(r)},
                           {"count", n.str()},
                           {"graduated_count", graduated_count(n, graduation).str()},
                           {"pair", pair.to_text()}});
  }
  return dump(json{{"schema_version", 1},
                   {"command", "measure"},
                   {"input", input_json(config)},
                   {"graduation", graduation.str()},
                   {"workers", workers},
                   {"results", results}});
}

std::string cmd_dim(const RunConfig& config) {
  const SetModel model = load_model(config);
  const int workers = checked_workers(config);

  std::vector<DimSample> samples;
  for (const Rational& r : requested_scales(config)) {
    samples.push_back(DimSample{r, grid_cover(model, r, workers).count()});
  }

  const DimensionFit fit = fit_dimension(std::move(samples));
  json rows = json::array();
  for (const DimSample& s : fit.samples) {
    json row{{"scale", to_text(s.scale)}, {"count", s.count.str()}};
    row["ln_inv_scale"] = -log_rational(s.scale);
    if (s.count >= 1) {
      row["ln_count"] = log_big(s.count);
    } else {
      row["ln_count"] = nullptr;
    }
    if (s.count >= 2 && s.scale < 1) {
      row["dimension"] =
          dimension(SizePair(Scale::rational(s.scale), MValue::finite(s.count)));
    } else {
      row["dimension"] = nullptr;
    }
    rows.push_back(std::move(row));
  }
  return dump(json{{"schema_version", 1},
                   {"command", "dim"},
                   {"input", input_json(config)},
                   {"samples", rows},
                   {"fit",
                    json{{"slope", fit.slope},
                         {"intercept", fit.intercept},
                         {"r_squared", fit.r_squared},
                         {"samples_used", fit.samples_used}}}});
}

std::string cmd_compare(const RunConfig& config) {
  if (config.input.empty() || config.input_b.empty()) {
    fail(errc::invalid_config, "compare needs two input files");
  }
  const CsvOptions options{config.delimiter, config.header};
  const SetModel left(read_points_csv(config.input, options));
  const SetModel right(read_points_csv(config.input_b, options));

  json report{{"schema_version", 1},
              {"command", "compare"},
              {"left",
               json{{"path", config.input},
                    {"count", BigInt(left.as_points().size()).str()}}},
              {"right",
               json{{"path", config.input_b},
                    {"count", BigInt(right.as_points().size()).str()}}},
              {"equal", sizes_equal(left, right)}};
  if (config.scale) {
    // per-scale counts may legitimately differ; reported, not judged
    const int workers = checked_workers(config);
    report["per_scale"] =
        json{{"scale", to_text(*config.scale)},
             {"left_count", grid_cover(left, *config.scale, workers).count().str()},
             {"right_count", grid_cover(right, *config.scale, workers).count().str()}};
  }
  return dump(report);
}

std::string cmd_algebra(const std::string& expression) {
  const AlgebraValue result = eval_algebra(expression);
  json value;
  if (const auto* d = std::get_if<double>(&result.value)) {
    value = *d;
  } else {
    value = result.to_text();
  }
  return dump(json{{"schema_version", 1},
                   {"command", "algebra"},
                   {"expression", expression},
                   {"result",
                    json{{"type", result.type_name()},
                         {"text", result.to_text()},
                         {"value", value}}}});
}

std::string cmd_infinity(const RunConfig& config) {
  if (config.sequence_length < 1) {
    fail(errc::invalid_config, "sequence length must be >= 1");
  }
  json sequence = json::array();
  for (const SymbolicDim& term : gch_dimension_sequence(config.sequence_length)) {
    sequence.push_back(term.to_text());
  }
  const ChEquation ch = ch_equation(Scale::limit_zero());
  return dump(json{{"schema_version", 1},
                   {"command", "infinity"},
                   {"n", config.sequence_length},
                   {"sequence", sequence},
                   {"ch",
                    json{{"equation", ch.equation},
                         {"corollary", ch.corollary},
                         {"hypothesis", ch.hypothesis}}}});
}

CheckOutcome cmd_check(const RunConfig& config) {
  if (config.trials < 1) fail(errc::invalid_config, "trials must be >= 1");
  const TrialSummary summary = run_property_trials(config.seed, config.trials);

  auto report_json = [](const PropertyReport& report) {
    json failures = json::array();
    for (const FailureCase& failure : report.failures) {
      failures.push_back(json{{"sets", failure.sets},
                              {"scale", failure.scale},
                              {"counts", failure.counts},
                              {"detail", failure.detail}});
    }
    return json{{"property", report.property},
                {"instances", report.instances},
                {"failures", failures}};
  };

  json reports = json::array();
  reports.push_back(report_json(summary.non_negativity));
  reports.push_back(report_json(summary.monotonicity));
  reports.push_back(report_json(summary.subadditivity));
  reports.push_back(report_json(summary.additivity_graduation1));

  const bool all_passed = summary.all_passed();
  return CheckOutcome{dump(json{{"schema_version", 1},
                                {"command", "check"},
                                {"seed", config.seed},
                                {"trials", config.trials},
                                {"reports", reports},
                                {"all_passed", all_passed}}),
                      all_passed};
}

std::string error_report(const std::string& code, const std::string& message) {
  return dump(json{{"error", json{{"code", code}, {"message", message}}}});
}

}  // namespace setmeter
