#include "setmeter/scale.hpp"

#include "setmeter/error.hpp"

namespace setmeter {

Scale Scale::rational(Rational value) {
  if (value <= 0) {
    fail(errc::invalid_value,
         "scale must be positive, got " + setmeter::to_text(value));
  }
  Scale s;
  s.value_ = std::move(value);
  return s;
}

Scale Scale::rational(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(errc::invalid_value, "scale with zero denominator");
  return rational(Rational(num, den));
}

Scale Scale::limit_zero() { return Scale(); }

const Rational& Scale::value() const {
  if (!value_) {
    fail(errc::limit_scale_unsupported,
         "the r -> 0 marker has no rational value");
  }
  return *value_;
}

bool Scale::operator==(const Scale& other) const {
  if (is_limit_zero() || other.is_limit_zero()) {
    return is_limit_zero() == other.is_limit_zero();
  }
  return *value_ == *other.value_;
}

std::string Scale::to_text() const {
  if (is_limit_zero()) return "0+";
  return setmeter::to_text(*value_);
}

Scale parse_scale(std::string_view text) {
  std::size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (text.substr(begin, end - begin) == "0+") return Scale::limit_zero();
  return Scale::rational(parse_rational(text));
}

}  // namespace setmeter
