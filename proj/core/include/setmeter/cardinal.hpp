#pragma once

// Symbolic sizes of infinite sets: cardinality as the self-cover pair (S, 1),
// the size (r, w) of the naturals, and the hypothesis-conditional rewriting
// of CH/GCH as a dimension sequence for the tower of infinities.
//
// Everything here renders and manipulates the symbolic equations without
// asserting their truth; the identification 2^w = 1/r never leaks into the
// global normal form.

#include <optional>
#include <string>
#include <vector>

#include "setmeter/set_model.hpp"
#include "setmeter/size_pair.hpp"

namespace setmeter {

// A set covering itself once. For finite point sets the graduation-1 count
// rides along.
struct CoverSize {
  std::string cover_name;
  MValue count;
  std::optional<BigInt> graduation1_count;

  std::string to_text() const;  // "(NAME, COUNT)"
};

CoverSize cardinality_of(const SetModel& s);

// Self-cover size for sets with no concrete model (the unmeasurable U).
CoverSize cardinality_of_named(std::string name);

// (r, w): the naturals at any scale.
SizePair size_of_naturals(const Scale& r);

// The CH rewriting at scale r: (r, 2^w) = (r, 1/r) = 1 and the derived
// dimension of the two-point set, w * (r, 2) = 1. Hypothesis, not theorem.
struct ChEquation {
  Scale scale;
  std::string equation;
  std::string corollary;
  bool hypothesis = true;
};

ChEquation ch_equation(const Scale& r);

// A dimension value attached to an infinity: a plain real, a ratio of
// m-values, or ln(v)/ln(1/r) with r left symbolic.
class SymbolicDim {
 public:
  enum class Kind { real, ratio, log_ratio };

  static SymbolicDim real(double value);
  static SymbolicDim ratio(MValue num, MValue den);
  static SymbolicDim log_ratio(MValue value);

  Kind kind() const { return kind_; }
  double real_value() const { return real_; }
  const MValue& num() const { return num_; }
  const MValue& den() const { return den_; }

  // Compact rendering: "ln w/ln(1/r)", "1", "2^w/w", "2^(2^w)/w".
  std::string to_text() const;

 private:
  SymbolicDim() = default;
  Kind kind_ = Kind::real;
  double real_ = 0;
  MValue num_, den_;
};

// First n terms of the dimension sequence of the increasing infinities:
// ln w/ln(1/r), 1, 2^w/w, 2^(2^w)/w, ... (the k-fold tower over w for k >= 2).
std::vector<SymbolicDim> gch_dimension_sequence(int n);

// Graduation-1 identity implies equal cardinality for finite models; the
// naturals equal only the naturals.
bool equal_cardinality(const SetModel& s1, const SetModel& s2);

}  // namespace setmeter
