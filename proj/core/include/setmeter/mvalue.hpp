#pragma once

// The value class every graduation and every count lives in: exact
// non-negative integers together with symbolic infinite values built from w
// (the count of the naturals) by sums, products and powers of two.
//
// Values are immutable expression trees behind shared nodes; every operation
// is a pure function, so values can be shared across threads freely.
//
// Normal form applies only exact finite folding, zero/one absorption and
// materialization of 2^n for modest n. No cardinal identities (such as
// w + w = w) are assumed: sums and products over symbolic operands stay
// structural.

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "setmeter/numeric.hpp"

namespace setmeter {

// Largest finite exponent n for which 2^n is materialized as digits.
inline constexpr std::uint64_t kDefaultPow2Bound = 1'000'000;

class MValue {
 public:
  enum class Kind : std::uint8_t { finite, omega, pow2, sum, prod };

  // Defaults to finite zero.
  MValue();

  static MValue finite(BigInt value);
  static MValue finite(std::uint64_t value);
  static MValue omega();

  // Structural node constructors. They apply no simplification; use the
  // arithmetic functions (or normalize) to restore the normal form.
  static MValue pow2_node(const MValue& operand);
  static MValue sum_node(const MValue& lhs, const MValue& rhs);
  static MValue prod_node(const MValue& lhs, const MValue& rhs);

  Kind kind() const;
  bool is_finite() const { return kind() == Kind::finite; }
  const BigInt& finite_value() const;  // kind() == finite
  MValue operand() const;              // kind() == pow2
  MValue lhs() const;                  // kind() == sum or prod
  MValue rhs() const;

  // Structural equality.
  bool operator==(const MValue& other) const;

  // Canonical grammar: digits | "w" | "2^(x)" | "(a+b)" | "(a*b)".
  std::string to_text() const;

 private:
  struct Node;
  explicit MValue(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Folds finite children, absorbs zeros and ones, and materializes 2^n for
// finite n within pow2_bound. Idempotent. Oversized finite exponents are kept
// as symbolic pow2 nodes rather than rejected.
MValue normalize(const MValue& v, std::uint64_t pow2_bound = kDefaultPow2Bound);

MValue add(const MValue& a, const MValue& b);

// Finite operands only, b <= a. Throws errc::underflow when b > a and
// errc::symbolic_unsupported for non-finite operands.
MValue sub(const MValue& a, const MValue& b);

MValue mul(const MValue& a, const MValue& b);

// 2^a. Finite a folds to digits when a <= exponent_bound and throws
// errc::exponent_too_large beyond it; symbolic a yields a pow2 node.
MValue pow2(const MValue& a, std::uint64_t exponent_bound = kDefaultPow2Bound);

// Total on finite values and on the tower w < 2^w < 2^(2^w) < ...; finite
// values sit below every tower. Structurally equal values are equivalent.
// Everything else is unordered (full comparability is not adopted).
std::partial_ordering compare(const MValue& a, const MValue& b);

inline MValue operator+(const MValue& a, const MValue& b) { return add(a, b); }
inline MValue operator-(const MValue& a, const MValue& b) { return sub(a, b); }
inline MValue operator*(const MValue& a, const MValue& b) { return mul(a, b); }

// Parses the canonical grammar; the result is structural (not normalized).
MValue parse_mvalue(std::string_view text);

}  // namespace setmeter
