#pragma once

// Batch measurement orchestration behind the CLI: configuration, input
// loading, and JSON report assembly. Reports are deterministic given
// (inputs, config, seed): keys are emitted in sorted order and no run
// metadata (timestamps, paths beyond the configured ones) is included.
//
// Every command returns the serialized UTF-8 JSON report; the schema is
// documented in the repository README and carries a schema_version field.

#include <cstdint>
#include <optional>
#include <string>

#include "setmeter/mvalue.hpp"
#include "setmeter/numeric.hpp"

namespace setmeter {

struct SweepSpec {
  Rational start;        // r0 > 0
  Rational factor;       // 0 < s < 1
  int steps = 1;         // k >= 1; scales are r0 * s^i for i in [0, k)
};

struct RunConfig {
  std::string input;                  // CSV path
  std::string input_b;                // second CSV path (compare)
  std::string preset;                 // "cantor" | "sierpinski" | ""
  std::optional<Rational> scale;
  std::optional<SweepSpec> sweep;
  MValue graduation = MValue::finite(1);  // finite, >= 1
  std::uint64_t seed = 0;
  std::uint32_t trials = 1000;
  int workers = 1;
  int sequence_length = 4;            // infinity subcommand
  char delimiter = ',';
  bool header = false;
};

std::string cmd_measure(const RunConfig& config);
std::string cmd_dim(const RunConfig& config);
std::string cmd_compare(const RunConfig& config);
std::string cmd_algebra(const std::string& expression);
std::string cmd_infinity(const RunConfig& config);

struct CheckOutcome {
  std::string report;
  bool all_passed = false;
};

CheckOutcome cmd_check(const RunConfig& config);

// Uniform error report for the CLI: {"error": {"code": ..., "message": ...}}.
std::string error_report(const std::string& code, const std::string& message);

}  // namespace setmeter
