#pragma once

// Covers in the expanded sense: a finite collection of elements whose union
// contains the measured set and whose every non-empty element meets it. The
// empty set is an implicit member of every cover and never counted.
//
// The canonical cover is the origin-anchored grid of half-open boxes
// [k*r, (k+1)*r) per axis. Every grid box at one scale is a translation of
// every other, so the count alone determines the size pair. Counts are exact
// big integers and never require materializing the element list; element
// enumeration is only needed by the equivalence decisions and is guarded.

#include <cstdint>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "setmeter/set_model.hpp"
#include "setmeter/size_pair.hpp"

namespace setmeter {

using BoxIndex = std::vector<BigInt>;

// Number of non-empty cover elements; the implicit empty member adds 0.
struct CoverCount {
  MValue value;
};

inline constexpr std::size_t kMaterializeLimit = std::size_t(1) << 22;

class Cover {
 public:
  struct GridIndices {
    std::set<BoxIndex> boxes;
  };
  // Product of inclusive index ranges [lo, hi] per axis (box models).
  struct GridRanges {
    std::vector<std::pair<BigInt, BigInt>> ranges;
  };
  // Depth-k recursive subdivision of a grid-aligned self-similar set.
  struct IfsDepth {
    IfsFractal model;
    unsigned depth;
  };
  struct Explicit {
    std::vector<SetModel> elements;
  };

  static Cover grid(Scale scale, std::set<BoxIndex> boxes);
  static Cover grid_ranges(Scale scale,
                           std::vector<std::pair<BigInt, BigInt>> ranges);
  static Cover ifs(Scale scale, IfsFractal model, unsigned depth);
  static Cover explicit_cover(Scale scale, std::vector<SetModel> elements);

  const Scale& scale() const { return scale_; }
  bool is_grid() const { return !std::holds_alternative<Explicit>(rep_); }
  bool contains_empty() const { return true; }

  // Exact element count; never materializes.
  BigInt count() const;

  // Grid-box index set; throws errc::cover_too_large beyond the limit.
  std::set<BoxIndex> box_indices(std::size_t limit = kMaterializeLimit) const;

  const std::vector<SetModel>* explicit_elements() const;

 private:
  Cover(Scale scale, std::variant<GridIndices, GridRanges, IfsDepth, Explicit> rep)
      : scale_(std::move(scale)), rep_(std::move(rep)) {}

  Scale scale_;
  std::variant<GridIndices, GridRanges, IfsDepth, Explicit> rep_;
};

// Origin-anchored grid cover at scale r > 0. Point sets hash into cells,
// boxes cover an index range per axis, and self-similar sets subdivide
// exactly at scales m^-k (errc::scale_not_aligned otherwise). Counting over
// point sets may be partitioned across workers; the merged result does not
// depend on the partition.
Cover grid_cover(const SetModel& s, const Rational& r, int workers = 1);

CoverCount count(const Cover& c);

// (r, N(r)) for the grid cover.
SizePair measure_size(const SetModel& s, const Rational& r, int workers = 1);

// Mutual translation-matching of the cover differences: every element of
// C1 - C1*C2 has a translation counterpart in C2 - C1*C2 and vice versa. For
// equal-scale grid covers this degenerates to "both differences empty or
// both non-empty".
bool covers_equivalent(const Cover& c1, const Cover& c2);

// Indistinguishability at scale r: the grid cover of s2, translated by the
// difference of bounding corners, coincides with the grid cover of s1.
bool sizes_equivalent_at(const SetModel& s1, const SetModel& s2,
                         const Rational& r);

// Graduation-1 equality: point sets compare by exact count (every singleton
// translates onto every other); the naturals equal only the naturals.
bool sizes_equal(const SetModel& s1, const SetModel& s2);

// Measuring with graduation g >= 1 reports ceil(n/g) groups.
BigInt graduated_count(const BigInt& n, const BigInt& g);

}  // namespace setmeter
