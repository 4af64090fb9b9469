#include "setmeter/algebra.hpp"

#include <cctype>
#include <cstdio>

#include "setmeter/error.hpp"

namespace setmeter {

const char* AlgebraValue::type_name() const {
  switch (value.index()) {
    case 0: return "mvalue";
    case 1: return "pair";
    default: return "real";
  }
}

std::string AlgebraValue::to_text() const {
  if (const auto* m = std::get_if<MValue>(&value)) return m->to_text();
  if (const auto* p = std::get_if<SizePair>(&value)) return p->to_text();
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.10g", std::get<double>(value));
  return buffer;
}

namespace {

class AlgebraParser {
 public:
  explicit AlgebraParser(std::string_view text) : text_(text) {}

  AlgebraValue run() {
    AlgebraValue v = expr();
    skip_ws();
    if (pos_ != text_.size()) {
      fail(errc::parse_error, err("trailing input"));
    }
    return v;
  }

 private:
  [[noreturn]] void die(const std::string& what) const {
    fail(errc::parse_error, err(what));
  }

  std::string err(const std::string& what) const {
    return what + " at position " + std::to_string(pos_) + " in '" +
           std::string(text_) + "'";
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) die(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool try_word(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  // Rethrows arithmetic failures with the operator position attached.
  template <typename Fn>
  AlgebraValue apply(std::size_t op_pos, Fn&& fn) {
    try {
      return fn();
    } catch (const Error& e) {
      if (e.code() == errc::parse_error) throw;
      fail(e.code(), std::string(e.what()) + " (operator at position " +
                         std::to_string(op_pos) + ")");
    }
  }

  AlgebraValue expr() {
    AlgebraValue left = term();
    while (true) {
      const char c = peek();
      if (c != '+' && c != '-') return left;
      const std::size_t op_pos = pos_;
      ++pos_;
      AlgebraValue right = term();
      left = apply(op_pos, [&]() -> AlgebraValue {
        if (left.value.index() != right.value.index()) {
          fail(errc::parse_error,
               err(std::string("cannot combine ") + left.type_name() +
                   " and " + right.type_name()));
        }
        if (auto* m = std::get_if<MValue>(&left.value)) {
          const MValue& n = std::get<MValue>(right.value);
          return AlgebraValue{c == '+' ? *m + n : *m - n};
        }
        if (auto* p = std::get_if<SizePair>(&left.value)) {
          const SizePair& q = std::get<SizePair>(right.value);
          return AlgebraValue{c == '+' ? *p + q : *p - q};
        }
        fail(errc::parse_error, err("'+'/'-' are not defined on reals here"));
      });
    }
  }

  AlgebraValue term() {
    AlgebraValue left = factor();
    while (peek() == '*') {
      const std::size_t op_pos = pos_;
      ++pos_;
      AlgebraValue right = factor();
      left = apply(op_pos, [&]() -> AlgebraValue {
        if (left.value.index() != right.value.index()) {
          fail(errc::parse_error,
               err(std::string("cannot combine ") + left.type_name() +
                   " and " + right.type_name()));
        }
        if (auto* m = std::get_if<MValue>(&left.value)) {
          return AlgebraValue{*m * std::get<MValue>(right.value)};
        }
        if (auto* p = std::get_if<SizePair>(&left.value)) {
          return AlgebraValue{*p * std::get<SizePair>(right.value)};
        }
        fail(errc::parse_error, err("'*' is not defined on reals here"));
      });
    }
    return left;
  }

  // number '^' '(' ... ')': scalar application to a pair, or 2^(m-value)
  AlgebraValue factor() {
    skip_ws();
    if (pos_ < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t start = pos_;
      const Rational number = read_number();
      if (peek() == '^') {
        const std::size_t op_pos = pos_;
        ++pos_;
        expect('(');
        if (auto pair = try_pair_tail()) {
          return apply(op_pos, [&]() -> AlgebraValue {
            return AlgebraValue{scalar_mul(number, *pair)};
          });
        }
        AlgebraValue inner = expr();
        expect(')');
        return apply(op_pos, [&]() -> AlgebraValue {
          if (number != 2) {
            fail(errc::parse_error,
                 err("only base 2 powers are defined on the value class"));
          }
          if (auto* m = std::get_if<MValue>(&inner.value)) {
            return AlgebraValue{pow2(*m)};
          }
          fail(errc::parse_error, err("'^' needs a value-class operand"));
        });
      }
      if (denominator(number) != 1) {
        pos_ = start;
        die("rational literals are only valid as scalars before '^'");
      }
      return AlgebraValue{MValue::finite(numerator(number))};
    }
    return primary();
  }

  AlgebraValue primary() {
    skip_ws();
    if (try_word("dist")) {
      const std::size_t op_pos = pos_;
      expect('(');
      AlgebraValue a = expr();
      expect(',');
      AlgebraValue b = expr();
      expect(')');
      return apply(op_pos, [&]() -> AlgebraValue {
        const auto* pa = std::get_if<SizePair>(&a.value);
        const auto* pb = std::get_if<SizePair>(&b.value);
        if (!pa || !pb) {
          fail(errc::parse_error, err("dist() needs two pairs"));
        }
        return AlgebraValue{distance(*pa, *pb)};
      });
    }
    if (try_word("dim")) {
      const std::size_t op_pos = pos_;
      expect('(');
      AlgebraValue a = expr();
      expect(')');
      return apply(op_pos, [&]() -> AlgebraValue {
        const auto* p = std::get_if<SizePair>(&a.value);
        if (!p) fail(errc::parse_error, err("dim() needs a pair"));
        return AlgebraValue{dimension(*p)};
      });
    }
    if (peek() == 'w') {
      ++pos_;
      return AlgebraValue{MValue::omega()};
    }
    if (peek() == '(') {
      ++pos_;
      if (auto pair = try_pair_tail()) return AlgebraValue{*pair};
      AlgebraValue inner = expr();
      expect(')');
      return inner;
    }
    die("expected a pair, value or function");
  }

  // Called just past '('; parses "scale , m-value )" or rewinds.
  std::optional<SizePair> try_pair_tail() {
    const std::size_t start = pos_;
    std::optional<Scale> scale;
    skip_ws();
    if (text_.substr(pos_, 2) == "0+") {
      pos_ += 2;
      scale = Scale::limit_zero();
    } else if (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      try {
        scale = Scale::rational(read_number());
      } catch (const Error&) {
        pos_ = start;
        return std::nullopt;
      }
    }
    if (!scale || peek() != ',') {
      pos_ = start;
      return std::nullopt;
    }
    ++pos_;  // ','
    MValue count = count_value();
    expect(')');
    return SizePair(*scale, count);
  }

  // A count literal in the canonical m-value grammar.
  MValue count_value() {
    skip_ws();
    const std::size_t start = pos_;
    int depth = 0;
    std::size_t end = pos_;
    while (end < text_.size()) {
      const char c = text_[end];
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) break;
        --depth;
      }
      ++end;
    }
    try {
      MValue v = parse_mvalue(text_.substr(start, end - start));
      pos_ = end;
      return v;
    } catch (const Error& e) {
      fail(errc::parse_error,
           std::string(e.what()) + " (count at position " +
               std::to_string(start) + ")");
    }
  }

  Rational read_number() {
    std::size_t end = pos_;
    while (end < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[end]))) {
      ++end;
    }
    if (end < text_.size() && text_[end] == '/') {
      std::size_t den_end = end + 1;
      while (den_end < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[den_end]))) {
        ++den_end;
      }
      if (den_end > end + 1) {
        const Rational value = parse_rational(text_.substr(pos_, den_end - pos_));
        pos_ = den_end;
        return value;
      }
    }
    const Rational value = parse_rational(text_.substr(pos_, end - pos_));
    pos_ = end;
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraValue eval_algebra(std::string_view expression) {
  return AlgebraParser(expression).run();
}

}  // namespace setmeter
