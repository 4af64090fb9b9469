#pragma once

// Concrete and symbolic measured sets. Coordinates are exact rationals so
// translation detection, disjointness and duplicate removal are decidable
// exactly. Point lists are kept sorted and deduplicated (set semantics).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "setmeter/numeric.hpp"

namespace setmeter {

using Point = std::vector<Rational>;

class FinitePoints {
 public:
  // dimension >= 1; every point must have that arity. Duplicates collapse.
  FinitePoints(int dimension, std::vector<Point> points);

  int dimension() const { return dimension_; }
  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool contains(const Point& p) const;

  bool operator==(const FinitePoints&) const = default;

 private:
  int dimension_;
  std::vector<Point> points_;  // sorted lexicographically, unique
};

// Half-open interval [lo, hi), lo < hi.
struct Interval {
  Rational lo;
  Rational hi;
  bool operator==(const Interval&) const = default;
};

class Box {
 public:
  explicit Box(std::vector<Interval> sides);

  int dimension() const { return static_cast<int>(sides_.size()); }
  const std::vector<Interval>& sides() const { return sides_; }

  bool operator==(const Box&) const = default;

 private:
  std::vector<Interval> sides_;
};

// Grid-aligned self-similar set: b contractions of ratio 1/m placing copies
// at integer offsets inside {0..m-1}^d. Counts are exact at scales m^-k.
class IfsFractal {
 public:
  IfsFractal(int dimension, int subdivision,
             std::vector<std::vector<int>> offsets);

  int dimension() const { return dimension_; }
  int subdivision() const { return subdivision_; }  // m
  const std::vector<std::vector<int>>& offsets() const { return offsets_; }
  std::size_t branching() const { return offsets_.size(); }  // b

  bool operator==(const IfsFractal&) const = default;

 private:
  int dimension_;
  int subdivision_;
  std::vector<std::vector<int>> offsets_;  // sorted, distinct
};

struct SymbolicNaturals {
  bool operator==(const SymbolicNaturals&) const = default;
};

class SetModel {
 public:
  enum class Kind { finite_points, box, ifs_fractal, naturals };

  SetModel(FinitePoints points) : value_(std::move(points)) {}
  SetModel(Box box) : value_(std::move(box)) {}
  SetModel(IfsFractal ifs) : value_(std::move(ifs)) {}
  SetModel(SymbolicNaturals naturals) : value_(naturals) {}

  Kind kind() const;
  bool is_points() const { return kind() == Kind::finite_points; }

  // Accessors throw errc::unsupported_model on a kind mismatch.
  const FinitePoints& as_points() const;
  const Box& as_box() const;
  const IfsFractal& as_ifs() const;

  int ambient_dimension() const;  // naturals live on the line

  bool operator==(const SetModel&) const = default;

  // Compact description for reports and failure descriptors.
  std::string describe() const;

 private:
  std::variant<FinitePoints, Box, IfsFractal, SymbolicNaturals> value_;
};

struct Translation {
  std::vector<Rational> offset;
};

// The unique constant offset e with a + e = b, if one exists. Defined for
// point sets and boxes; throws errc::unsupported_model otherwise.
std::optional<Translation> is_translation(const SetModel& a, const SetModel& b);

SetModel translate(const SetModel& a, const std::vector<Rational>& offset);

// Union of disjoint point sets; throws errc::not_disjoint on overlap.
SetModel union_disjoint(const SetModel& a, const SetModel& b);

// Point set in dimension d_a + d_b with all concatenated coordinate pairs.
SetModel cartesian_product(const SetModel& a, const SetModel& b);

// Minimum Chebyshev distance over point pairs; needs >= 2 points.
Rational min_gap(const SetModel& a);

// Subset test for point sets of equal dimension.
bool is_subset(const SetModel& a, const SetModel& b);

// Named presets: "cantor" (d=1, m=3, offsets {0,2}) and "sierpinski"
// (d=2, m=2, offsets {(0,0),(1,0),(0,1)}).
SetModel ifs_preset(std::string_view name);

}  // namespace setmeter
