#include "setmeter/cardinal.hpp"

#include <cstdio>

#include "setmeter/cover.hpp"
#include "setmeter/error.hpp"

namespace setmeter {

namespace {

// Compact rendering: powers over a bare w drop the parentheses.
std::string tight_text(const MValue& v) {
  switch (v.kind()) {
    case MValue::Kind::finite:
      return v.finite_value().str();
    case MValue::Kind::omega:
      return "w";
    case MValue::Kind::pow2: {
      const MValue o = v.operand();
      if (o.kind() == MValue::Kind::omega) return "2^w";
      return "2^(" + tight_text(o) + ")";
    }
    case MValue::Kind::sum:
      return "(" + tight_text(v.lhs()) + "+" + tight_text(v.rhs()) + ")";
    case MValue::Kind::prod:
      return "(" + tight_text(v.lhs()) + "*" + tight_text(v.rhs()) + ")";
  }
  return {};
}

std::string real_text(double value) {
  if (value == static_cast<long long>(value)) {
    return std::to_string(static_cast<long long>(value));
  }
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.10g", value);
  return buffer;
}

}  // namespace

std::string CoverSize::to_text() const {
  return "(" + cover_name + ", " + count.to_text() + ")";
}

CoverSize cardinality_of(const SetModel& s) {
  CoverSize size{s.describe(), MValue::finite(1), std::nullopt};
  if (s.is_points()) {
    size.graduation1_count = BigInt(s.as_points().size());
  }
  return size;
}

CoverSize cardinality_of_named(std::string name) {
  return CoverSize{std::move(name), MValue::finite(1), std::nullopt};
}

SizePair size_of_naturals(const Scale& r) {
  return SizePair(r, MValue::omega());
}

ChEquation ch_equation(const Scale& r) {
  if (r.is_rational() && r.value() >= 1) {
    fail(errc::scale_not_sub_unit,
         "the CH rewriting is stated for r < 1, got " + r.to_text());
  }
  const std::string s = r.to_text();
  return ChEquation{r, "(" + s + ", 2^w) = (" + s + ", 1/r) = 1",
                    "w * (r, 2) = 1", true};
}

SymbolicDim SymbolicDim::real(double value) {
  SymbolicDim d;
  d.kind_ = Kind::real;
  d.real_ = value;
  return d;
}

SymbolicDim SymbolicDim::ratio(MValue num, MValue den) {
  if (den.is_finite() && den.finite_value() == 0) {
    fail(errc::invalid_value, "ratio with zero denominator");
  }
  SymbolicDim d;
  d.kind_ = Kind::ratio;
  d.num_ = std::move(num);
  d.den_ = std::move(den);
  return d;
}

SymbolicDim SymbolicDim::log_ratio(MValue value) {
  SymbolicDim d;
  d.kind_ = Kind::log_ratio;
  d.num_ = std::move(value);
  return d;
}

std::string SymbolicDim::to_text() const {
  switch (kind_) {
    case Kind::real:
      return real_text(real_);
    case Kind::ratio:
      return tight_text(num_) + "/" + tight_text(den_);
    case Kind::log_ratio:
      return "ln " + tight_text(num_) + "/ln(1/r)";
  }
  return {};
}

std::vector<SymbolicDim> gch_dimension_sequence(int n) {
  if (n < 1) fail(errc::invalid_value, "sequence length must be >= 1");
  std::vector<SymbolicDim> terms;
  terms.reserve(n);
  terms.push_back(SymbolicDim::log_ratio(MValue::omega()));
  if (n >= 2) terms.push_back(SymbolicDim::real(1.0));
  MValue tower = MValue::pow2_node(MValue::omega());
  for (int i = 3; i <= n; ++i) {
    terms.push_back(SymbolicDim::ratio(tower, MValue::omega()));
    tower = MValue::pow2_node(tower);
  }
  return terms;
}

bool equal_cardinality(const SetModel& s1, const SetModel& s2) {
  const auto supported = [](const SetModel& s) {
    return s.is_points() || s.kind() == SetModel::Kind::naturals;
  };
  if (!supported(s1) || !supported(s2)) {
    fail(errc::unsupported_model,
         "cardinality comparison is defined for point sets and the naturals");
  }
  return sizes_equal(s1, s2);
}

}  // namespace setmeter
