#include "setmeter/size_pair.hpp"

#include <utility>

#include "setmeter/error.hpp"

namespace setmeter {

namespace {

void require_shared_scale(const SizePair& x, const SizePair& y,
                          const char* op) {
  if (!(x.scale == y.scale)) {
    fail(errc::scale_mismatch, std::string(op) + " needs a shared scale: " +
                                   x.to_text() + " vs " + y.to_text());
  }
}

}  // namespace

bool SizePair::operator==(const SizePair& other) const {
  if (is_zero() && other.is_zero()) return true;
  return scale == other.scale && count == other.count;
}

std::string SizePair::to_text() const {
  return "(" + scale.to_text() + "," + count.to_text() + ")";
}

SizePair add(const SizePair& x, const SizePair& y) {
  require_shared_scale(x, y, "addition");
  return SizePair(x.scale, x.count + y.count);
}

SizePair sub(const SizePair& x, const SizePair& y) {
  require_shared_scale(x, y, "subtraction");
  return SizePair(x.scale, x.count - y.count);
}

SizePair mul(const SizePair& x, const SizePair& y) {
  require_shared_scale(x, y, "multiplication");
  if (x.scale.is_limit_zero()) {
    fail(errc::limit_scale_unsupported,
         "multiplication on the r -> 0 marker");
  }
  const Rational& r = x.scale.value();
  return SizePair(Scale::rational(r * r), x.count * y.count);
}

SizePair scalar_mul(const Rational& c, const SizePair& y) {
  if (c < 0) {
    fail(errc::invalid_value, "scalar must be non-negative, got " + to_text(c));
  }
  if (!y.count.is_finite()) {
    fail(errc::symbolic_unsupported,
         "scalar application needs a finite count: " + y.to_text());
  }
  const BigInt& n = y.count.finite_value();
  if (n == 1) {
    fail(errc::unit_count_excluded,
         "scalar application to the unit count is excluded");
  }
  const BigInt p = numerator(c);
  const BigInt q = denominator(c);
  BigInt root = n;
  if (q != 1) {
    root = iroot(n, q.convert_to<unsigned long>());
    if (boost::multiprecision::pow(root, q.convert_to<unsigned>()) != n) {
      fail(errc::non_integer_power,
           n.str() + "^(" + to_text(c) + ") is not an integer");
    }
  }
  if (p > 1'000'000) {
    fail(errc::exponent_too_large,
         "power " + to_text(c) + " is too large to materialize");
  }
  const BigInt result =
      boost::multiprecision::pow(root, p.convert_to<unsigned>());
  return SizePair(y.scale, MValue::finite(result));
}

SizePair distance(const SizePair& x, const SizePair& y) {
  require_shared_scale(x, y, "distance");
  if (!x.count.is_finite() || !y.count.is_finite()) {
    fail(errc::symbolic_unsupported,
         "distance needs finite counts: " + x.to_text() + ", " + y.to_text());
  }
  const BigInt& nx = x.count.finite_value();
  const BigInt& ny = y.count.finite_value();
  return SizePair(x.scale, MValue::finite(nx >= ny ? nx - ny : ny - nx));
}

double dimension(const SizePair& x) {
  if (x.scale.is_limit_zero()) {
    fail(errc::limit_scale_unsupported, "dimension of the r -> 0 marker");
  }
  const Rational& r = x.scale.value();
  if (r >= 1) {
    fail(errc::scale_not_sub_unit,
         "dimension needs r < 1, got " + x.scale.to_text());
  }
  if (!x.count.is_finite()) {
    fail(errc::symbolic_unsupported,
         "dimension of symbolic counts is handled symbolically: " +
             x.to_text());
  }
  const BigInt& n = x.count.finite_value();
  if (n < 2) {
    fail(errc::degenerate_count,
         "dimension degenerates for counts 0 and 1, got " + n.str());
  }
  // ln(1/r) = ln(q) - ln(p) for r = p/q
  const double ln_inv_r = log_big(denominator(r)) - log_big(numerator(r));
  return log_big(n) / ln_inv_r;
}

std::partial_ordering compare(const SizePair& x, const SizePair& y) {
  if (x.is_zero() && y.is_zero()) return std::partial_ordering::equivalent;
  if (!(x.scale == y.scale)) return std::partial_ordering::unordered;
  return compare(x.count, y.count);
}

SizePair parse_size_pair(std::string_view text) {
  auto bad = [&](const std::string& what) -> SizePair {
    fail(errc::parse_error, what + " in pair '" + std::string(text) + "'");
  };
  std::size_t i = 0, end = text.size();
  auto skip_ws = [&] {
    while (i < end && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= end || text[i] != '(') return bad("expected '('");
  ++i;
  const std::size_t comma = text.find(',', i);
  if (comma == std::string_view::npos) return bad("expected ','");
  const Scale scale = parse_scale(text.substr(i, comma - i));
  std::size_t close = text.rfind(')');
  if (close == std::string_view::npos || close < comma) {
    return bad("expected ')'");
  }
  for (std::size_t j = close + 1; j < end; ++j) {
    if (!std::isspace(static_cast<unsigned char>(text[j]))) {
      return bad("trailing input");
    }
  }
  const MValue count = parse_mvalue(text.substr(comma + 1, close - comma - 1));
  return SizePair(scale, count);
}

}  // namespace setmeter
