#pragma once

// Measurement scale: an exact positive rational radius, or the symbolic
// marker for the r -> 0 limit. The limit marker supports only equality with
// itself and rendering; arithmetic on limits is rejected, not approximated.

#include <optional>
#include <string>
#include <string_view>

#include "setmeter/numeric.hpp"

namespace setmeter {

class Scale {
 public:
  static Scale rational(Rational value);
  static Scale rational(const BigInt& num, const BigInt& den);
  static Scale limit_zero();

  bool is_limit_zero() const { return !value_.has_value(); }
  bool is_rational() const { return value_.has_value(); }

  // Requires is_rational().
  const Rational& value() const;

  bool operator==(const Scale& other) const;

  // "p/q" (or "p" for integers); "0+" for the limit marker.
  std::string to_text() const;

 private:
  Scale() = default;
  std::optional<Rational> value_;
};

// Accepts the rendering grammar: "0+" or a positive rational literal.
Scale parse_scale(std::string_view text);

}  // namespace setmeter
