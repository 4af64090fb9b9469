#pragma once

#include <stdexcept>
#include <string>

namespace setmeter {

// Failure codes for the partial operations of the size calculus. Each code
// names one violated contract; the message carries the offending operands.
enum class errc {
  underflow,                // subtraction would leave the non-negative class
  symbolic_unsupported,     // operation is defined for finite values only
  exponent_too_large,       // refused to materialize 2^n
  scale_mismatch,           // pair operation across different scales
  limit_scale_unsupported,  // arithmetic on the r -> 0 marker
  unit_count_excluded,      // scalar application to a unit count
  non_integer_power,        // N^c leaves the integer class
  degenerate_count,         // dimension of counts 0 or 1
  scale_not_sub_unit,       // dimension needs r < 1
  unsupported_model,        // operation not defined for this set variant
  not_disjoint,
  too_few_points,
  scale_not_aligned,        // cover scale is not a power of the IFS ratio
  not_a_subset,
  parse_error,
  insufficient_samples,
  invalid_config,
  invalid_value,            // constructor invariant violated
  cover_too_large,          // equivalence check would materialize too many boxes
  dimension_mismatch,
};

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::underflow: return "underflow";
    case errc::symbolic_unsupported: return "symbolic_unsupported";
    case errc::exponent_too_large: return "exponent_too_large";
    case errc::scale_mismatch: return "scale_mismatch";
    case errc::limit_scale_unsupported: return "limit_scale_unsupported";
    case errc::unit_count_excluded: return "unit_count_excluded";
    case errc::non_integer_power: return "non_integer_power";
    case errc::degenerate_count: return "degenerate_count";
    case errc::scale_not_sub_unit: return "scale_not_sub_unit";
    case errc::unsupported_model: return "unsupported_model";
    case errc::not_disjoint: return "not_disjoint";
    case errc::too_few_points: return "too_few_points";
    case errc::scale_not_aligned: return "scale_not_aligned";
    case errc::not_a_subset: return "not_a_subset";
    case errc::parse_error: return "parse_error";
    case errc::insufficient_samples: return "insufficient_samples";
    case errc::invalid_config: return "invalid_config";
    case errc::invalid_value: return "invalid_value";
    case errc::cover_too_large: return "cover_too_large";
    case errc::dimension_mismatch: return "dimension_mismatch";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace setmeter
