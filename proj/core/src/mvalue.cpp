#include "setmeter/mvalue.hpp"

#include <cctype>
#include <optional>
#include <utility>

#include "setmeter/error.hpp"

namespace setmeter {

struct MValue::Node {
  Kind kind;
  BigInt value;                      // finite payload
  std::shared_ptr<const Node> a, b;  // pow2 operand / sum,prod children
};

MValue::MValue() : MValue(finite(BigInt(0))) {}

MValue MValue::finite(BigInt value) {
  if (value < 0) {
    fail(errc::invalid_value, "negative values are not representable");
  }
  return MValue(std::make_shared<const Node>(
      Node{Kind::finite, std::move(value), nullptr, nullptr}));
}

MValue MValue::finite(std::uint64_t value) { return finite(BigInt(value)); }

MValue MValue::omega() {
  static const auto node = std::make_shared<const Node>(
      Node{Kind::omega, BigInt(0), nullptr, nullptr});
  return MValue(node);
}

MValue MValue::pow2_node(const MValue& operand) {
  return MValue(std::make_shared<const Node>(
      Node{Kind::pow2, BigInt(0), operand.node_, nullptr}));
}

MValue MValue::sum_node(const MValue& lhs, const MValue& rhs) {
  return MValue(std::make_shared<const Node>(
      Node{Kind::sum, BigInt(0), lhs.node_, rhs.node_}));
}

MValue MValue::prod_node(const MValue& lhs, const MValue& rhs) {
  return MValue(std::make_shared<const Node>(
      Node{Kind::prod, BigInt(0), lhs.node_, rhs.node_}));
}

MValue::Kind MValue::kind() const { return node_->kind; }

const BigInt& MValue::finite_value() const {
  if (kind() != Kind::finite) {
    fail(errc::symbolic_unsupported, "value is not finite: " + to_text());
  }
  return node_->value;
}

MValue MValue::operand() const {
  if (kind() != Kind::pow2) fail(errc::invalid_value, "not a pow2 node");
  return MValue(node_->a);
}

MValue MValue::lhs() const {
  if (kind() != Kind::sum && kind() != Kind::prod) {
    fail(errc::invalid_value, "not a sum or prod node");
  }
  return MValue(node_->a);
}

MValue MValue::rhs() const {
  if (kind() != Kind::sum && kind() != Kind::prod) {
    fail(errc::invalid_value, "not a sum or prod node");
  }
  return MValue(node_->b);
}

bool MValue::operator==(const MValue& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::finite:
      return node_->value == other.node_->value;
    case Kind::omega:
      return true;
    case Kind::pow2:
      return operand() == other.operand();
    case Kind::sum:
    case Kind::prod:
      return lhs() == other.lhs() && rhs() == other.rhs();
  }
  return false;
}

std::string MValue::to_text() const {
  switch (kind()) {
    case Kind::finite:
      return node_->value.str();
    case Kind::omega:
      return "w";
    case Kind::pow2:
      return "2^(" + operand().to_text() + ")";
    case Kind::sum:
      return "(" + lhs().to_text() + "+" + rhs().to_text() + ")";
    case Kind::prod:
      return "(" + lhs().to_text() + "*" + rhs().to_text() + ")";
  }
  return {};
}

MValue normalize(const MValue& v, std::uint64_t pow2_bound) {
  switch (v.kind()) {
    case MValue::Kind::finite:
    case MValue::Kind::omega:
      return v;
    case MValue::Kind::pow2: {
      const MValue o = normalize(v.operand(), pow2_bound);
      if (o.is_finite() && o.finite_value() <= pow2_bound) {
        return MValue::finite(BigInt(1)
                              << o.finite_value().convert_to<std::uint64_t>());
      }
      return MValue::pow2_node(o);
    }
    case MValue::Kind::sum: {
      const MValue a = normalize(v.lhs(), pow2_bound);
      const MValue b = normalize(v.rhs(), pow2_bound);
      if (a.is_finite() && b.is_finite()) {
        return MValue::finite(a.finite_value() + b.finite_value());
      }
      if (a.is_finite() && a.finite_value() == 0) return b;
      if (b.is_finite() && b.finite_value() == 0) return a;
      return MValue::sum_node(a, b);
    }
    case MValue::Kind::prod: {
      const MValue a = normalize(v.lhs(), pow2_bound);
      const MValue b = normalize(v.rhs(), pow2_bound);
      if (a.is_finite() && b.is_finite()) {
        return MValue::finite(a.finite_value() * b.finite_value());
      }
      if (a.is_finite()) {
        if (a.finite_value() == 0) return MValue::finite(BigInt(0));
        if (a.finite_value() == 1) return b;
      }
      if (b.is_finite()) {
        if (b.finite_value() == 0) return MValue::finite(BigInt(0));
        if (b.finite_value() == 1) return a;
      }
      return MValue::prod_node(a, b);
    }
  }
  return v;
}

MValue add(const MValue& a, const MValue& b) {
  return normalize(MValue::sum_node(a, b));
}

MValue sub(const MValue& a, const MValue& b) {
  const MValue an = normalize(a);
  const MValue bn = normalize(b);
  if (!an.is_finite() || !bn.is_finite()) {
    fail(errc::symbolic_unsupported,
         "subtraction is defined for finite values only: " + an.to_text() +
             " - " + bn.to_text());
  }
  if (bn.finite_value() > an.finite_value()) {
    fail(errc::underflow, "subtraction underflow: " + an.to_text() + " - " +
                              bn.to_text());
  }
  return MValue::finite(an.finite_value() - bn.finite_value());
}

MValue mul(const MValue& a, const MValue& b) {
  return normalize(MValue::prod_node(a, b));
}

MValue pow2(const MValue& a, std::uint64_t exponent_bound) {
  const MValue an = normalize(a, exponent_bound);
  if (an.is_finite()) {
    if (an.finite_value() > exponent_bound) {
      fail(errc::exponent_too_large,
           "2^" + an.finite_value().str() + " exceeds the exponent bound " +
               std::to_string(exponent_bound));
    }
    return MValue::finite(BigInt(1)
                          << an.finite_value().convert_to<std::uint64_t>());
  }
  return MValue::pow2_node(an);
}

namespace {

// Height of a pure tower: w has height 0, 2^(w) height 1, and so on.
std::optional<unsigned> tower_height(const MValue& v) {
  if (v.kind() == MValue::Kind::omega) return 0;
  if (v.kind() == MValue::Kind::pow2) {
    if (auto h = tower_height(v.operand())) return *h + 1;
  }
  return std::nullopt;
}

}  // namespace

std::partial_ordering compare(const MValue& a, const MValue& b) {
  if (a == b) return std::partial_ordering::equivalent;
  if (a.is_finite() && b.is_finite()) {
    return a.finite_value() < b.finite_value()
               ? std::partial_ordering::less
               : std::partial_ordering::greater;
  }
  const auto ha = tower_height(a);
  const auto hb = tower_height(b);
  if (a.is_finite() && hb) return std::partial_ordering::less;
  if (ha && b.is_finite()) return std::partial_ordering::greater;
  if (ha && hb) {
    return *ha < *hb ? std::partial_ordering::less
                     : std::partial_ordering::greater;
  }
  return std::partial_ordering::unordered;
}

namespace {

class MValueParser {
 public:
  explicit MValueParser(std::string_view text) : text_(text) {}

  MValue run() {
    MValue v = parse();
    skip_ws();
    if (pos_ != text_.size()) {
      fail(errc::parse_error, err("trailing input"));
    }
    return v;
  }

 private:
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

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c) {
      fail(errc::parse_error, err(std::string("expected '") + c + "'"));
    }
    ++pos_;
  }

  MValue parse() {
    skip_ws();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        digits.push_back(text_[pos_++]);
      }
      if (peek() == '^') {
        if (digits != "2") {
          fail(errc::parse_error, err("only base 2 powers are representable"));
        }
        ++pos_;
        expect('(');
        MValue inner = parse();
        skip_ws();
        expect(')');
        return MValue::pow2_node(inner);
      }
      return MValue::finite(BigInt(digits));
    }
    if (c == 'w') {
      ++pos_;
      return MValue::omega();
    }
    if (c == '(') {
      ++pos_;
      MValue a = parse();
      skip_ws();
      const char op = peek();
      if (op != '+' && op != '*') {
        fail(errc::parse_error, err("expected '+' or '*'"));
      }
      ++pos_;
      MValue b = parse();
      skip_ws();
      expect(')');
      return op == '+' ? MValue::sum_node(a, b) : MValue::prod_node(a, b);
    }
    fail(errc::parse_error, err("expected a value"));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MValue parse_mvalue(std::string_view text) { return MValueParser(text).run(); }

}  // namespace setmeter
