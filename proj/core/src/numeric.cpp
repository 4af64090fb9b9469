#include "setmeter/numeric.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

#include "setmeter/error.hpp"

namespace setmeter {

namespace {

BigInt pow10(std::size_t k) {
  BigInt r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= 10;
  return r;
}

}  // namespace

BigInt floor_rational(const Rational& q) {
  const BigInt num = numerator(q);
  const BigInt den = denominator(q);  // always > 0 in canonical form
  BigInt d = num / den;               // truncates toward zero
  if (num < 0 && num % den != 0) --d;
  return d;
}

BigInt ceil_rational(const Rational& q) {
  const BigInt num = numerator(q);
  const BigInt den = denominator(q);
  BigInt d = num / den;
  if (num > 0 && num % den != 0) ++d;
  return d;
}

BigInt ceil_div(const BigInt& n, const BigInt& d) {
  BigInt q = n / d;
  if (n > 0 && n % d != 0) ++q;
  return q;
}

BigInt floor_quotient(const Rational& value, const Rational& scale) {
  // (a/b) / (c/d) = (a*d) / (b*c) with b, c, d > 0
  const BigInt num = numerator(value) * denominator(scale);
  const BigInt den = denominator(value) * numerator(scale);
  BigInt q = num / den;
  if (num < 0 && num % den != 0) --q;
  return q;
}

BigInt ceil_quotient(const Rational& value, const Rational& scale) {
  const BigInt num = numerator(value) * denominator(scale);
  const BigInt den = denominator(value) * numerator(scale);
  BigInt q = num / den;
  if (num > 0 && num % den != 0) ++q;
  return q;
}

BigInt iroot(const BigInt& n, unsigned long k) {
  if (n < 0) fail(errc::invalid_value, "iroot of a negative value");
  if (k == 0) fail(errc::invalid_value, "iroot with k = 0");
  if (k == 1 || n <= 1) return n;
  using boost::multiprecision::msb;
  // root has about msb(n)/k bits; bracket and bisect
  BigInt hi = BigInt(1) << (static_cast<unsigned>(msb(n)) / k + 2);
  BigInt lo = 0;
  while (lo < hi - 1) {
    BigInt mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, static_cast<unsigned>(k)) <= n) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

double log_big(const BigInt& n) {
  if (n < 1) fail(errc::invalid_value, "log of a non-positive integer");
  using boost::multiprecision::msb;
  const unsigned bits = (n == 1) ? 0 : static_cast<unsigned>(msb(n));
  if (bits < 900) {
    return std::log(n.convert_to<double>());
  }
  const unsigned shift = bits - 60;
  const BigInt top = n >> shift;
  return std::log(top.convert_to<double>()) + shift * std::numbers::ln2;
}

double log_rational(const Rational& q) {
  if (q <= 0) fail(errc::invalid_value, "log of a non-positive rational");
  return log_big(numerator(q)) - log_big(denominator(q));
}

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto bad = [&]() -> Rational {
    fail(errc::parse_error,
         "bad numeric literal '" + std::string(text) + "'");
  };
  while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t end = n;
  while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (i >= end) return bad();

  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&](std::size_t& pos) {
    std::string out;
    while (pos < end && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      out.push_back(text[pos]);
      ++pos;
    }
    return out;
  };

  const std::string whole = digits(i);
  Rational result;
  if (i < end && text[i] == '/') {
    ++i;
    const std::string den = digits(i);
    if (whole.empty() || den.empty() || i != end) return bad();
    const BigInt d(den);
    if (d == 0) fail(errc::parse_error, "zero denominator in '" + std::string(text) + "'");
    result = Rational(BigInt(whole), d);
  } else if (i < end && text[i] == '.') {
    ++i;
    const std::string frac = digits(i);
    if ((whole.empty() && frac.empty()) || i != end) return bad();
    const BigInt ip = whole.empty() ? BigInt(0) : BigInt(whole);
    const BigInt fp = frac.empty() ? BigInt(0) : BigInt(frac);
    const BigInt scale = pow10(frac.size());
    result = Rational(ip * scale + fp, scale);
  } else {
    if (whole.empty() || i != end) return bad();
    result = Rational(BigInt(whole));
  }
  if (negative) result = -result;
  return result;
}

std::string to_text(const Rational& q) {
  const BigInt num = numerator(q);
  const BigInt den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace setmeter
