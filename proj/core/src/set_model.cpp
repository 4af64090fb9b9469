#include "setmeter/set_model.hpp"

#include <algorithm>
#include <set>

#include "setmeter/error.hpp"

namespace setmeter {

FinitePoints::FinitePoints(int dimension, std::vector<Point> points)
    : dimension_(dimension), points_(std::move(points)) {
  if (dimension_ < 1) {
    fail(errc::invalid_value, "point sets need dimension >= 1");
  }
  for (const Point& p : points_) {
    if (static_cast<int>(p.size()) != dimension_) {
      fail(errc::dimension_mismatch,
           "point arity " + std::to_string(p.size()) +
               " does not match dimension " + std::to_string(dimension_));
    }
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool FinitePoints::contains(const Point& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

Box::Box(std::vector<Interval> sides) : sides_(std::move(sides)) {
  if (sides_.empty()) fail(errc::invalid_value, "box needs dimension >= 1");
  for (const Interval& side : sides_) {
    if (!(side.lo < side.hi)) {
      fail(errc::invalid_value, "degenerate box side [" + to_text(side.lo) +
                                    ", " + to_text(side.hi) + ")");
    }
  }
}

IfsFractal::IfsFractal(int dimension, int subdivision,
                       std::vector<std::vector<int>> offsets)
    : dimension_(dimension),
      subdivision_(subdivision),
      offsets_(std::move(offsets)) {
  if (dimension_ < 1) fail(errc::invalid_value, "ifs needs dimension >= 1");
  if (subdivision_ < 2) {
    fail(errc::invalid_value, "ifs subdivision must be >= 2");
  }
  if (offsets_.empty()) fail(errc::invalid_value, "ifs needs >= 1 offset");
  for (const auto& o : offsets_) {
    if (static_cast<int>(o.size()) != dimension_) {
      fail(errc::dimension_mismatch, "ifs offset arity mismatch");
    }
    for (int c : o) {
      if (c < 0 || c >= subdivision_) {
        fail(errc::invalid_value, "ifs offsets must lie in {0..m-1}^d");
      }
    }
  }
  std::sort(offsets_.begin(), offsets_.end());
  if (std::adjacent_find(offsets_.begin(), offsets_.end()) != offsets_.end()) {
    fail(errc::invalid_value, "ifs offsets must be distinct");
  }
}

SetModel::Kind SetModel::kind() const {
  switch (value_.index()) {
    case 0: return Kind::finite_points;
    case 1: return Kind::box;
    case 2: return Kind::ifs_fractal;
    default: return Kind::naturals;
  }
}

const FinitePoints& SetModel::as_points() const {
  if (const auto* p = std::get_if<FinitePoints>(&value_)) return *p;
  fail(errc::unsupported_model, "expected a finite point set, got " + describe());
}

const Box& SetModel::as_box() const {
  if (const auto* b = std::get_if<Box>(&value_)) return *b;
  fail(errc::unsupported_model, "expected a box, got " + describe());
}

const IfsFractal& SetModel::as_ifs() const {
  if (const auto* f = std::get_if<IfsFractal>(&value_)) return *f;
  fail(errc::unsupported_model, "expected an ifs fractal, got " + describe());
}

int SetModel::ambient_dimension() const {
  switch (kind()) {
    case Kind::finite_points: return as_points().dimension();
    case Kind::box: return as_box().dimension();
    case Kind::ifs_fractal: return as_ifs().dimension();
    case Kind::naturals: return 1;
  }
  return 1;
}

namespace {

std::string point_text(const Point& p) {
  if (p.size() == 1) return to_text(p[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += to_text(p[i]);
  }
  return out + ")";
}

}  // namespace

std::string SetModel::describe() const {
  switch (kind()) {
    case Kind::finite_points: {
      const FinitePoints& fp = as_points();
      if (fp.size() <= 8) {
        std::string out = "{";
        for (std::size_t i = 0; i < fp.size(); ++i) {
          if (i) out += ",";
          out += point_text(fp.points()[i]);
        }
        return out + "}";
      }
      return "points[n=" + std::to_string(fp.size()) +
             ",d=" + std::to_string(fp.dimension()) + "]";
    }
    case Kind::box: {
      std::string out;
      for (const Interval& side : as_box().sides()) {
        if (!out.empty()) out += "x";
        out += "[" + to_text(side.lo) + "," + to_text(side.hi) + ")";
      }
      return out;
    }
    case Kind::ifs_fractal: {
      const IfsFractal& f = as_ifs();
      return "ifs[d=" + std::to_string(f.dimension()) +
             ",m=" + std::to_string(f.subdivision()) +
             ",b=" + std::to_string(f.branching()) + "]";
    }
    case Kind::naturals:
      return "N";
  }
  return {};
}

std::optional<Translation> is_translation(const SetModel& a,
                                          const SetModel& b) {
  const auto supported = [](const SetModel& s) {
    return s.kind() == SetModel::Kind::finite_points ||
           s.kind() == SetModel::Kind::box;
  };
  if (!supported(a) || !supported(b)) {
    fail(errc::unsupported_model,
         "translation detection is defined for point sets and boxes");
  }
  if (a.kind() != b.kind()) return std::nullopt;
  if (a.ambient_dimension() != b.ambient_dimension()) return std::nullopt;

  if (a.kind() == SetModel::Kind::box) {
    const auto& sa = a.as_box().sides();
    const auto& sb = b.as_box().sides();
    std::vector<Rational> offset;
    offset.reserve(sa.size());
    for (std::size_t i = 0; i < sa.size(); ++i) {
      if (sa[i].hi - sa[i].lo != sb[i].hi - sb[i].lo) return std::nullopt;
      offset.push_back(sb[i].lo - sa[i].lo);
    }
    return Translation{std::move(offset)};
  }

  const auto& pa = a.as_points().points();  // both sorted canonically
  const auto& pb = b.as_points().points();
  if (pa.size() != pb.size()) return std::nullopt;
  if (pa.empty()) {
    return Translation{std::vector<Rational>(a.ambient_dimension(), Rational(0))};
  }
  std::vector<Rational> offset;
  offset.reserve(pa[0].size());
  for (std::size_t c = 0; c < pa[0].size(); ++c) {
    offset.push_back(pb[0][c] - pa[0][c]);
  }
  for (std::size_t i = 0; i < pa.size(); ++i) {
    for (std::size_t c = 0; c < offset.size(); ++c) {
      if (pa[i][c] + offset[c] != pb[i][c]) return std::nullopt;
    }
  }
  return Translation{std::move(offset)};
}

SetModel translate(const SetModel& a, const std::vector<Rational>& offset) {
  if (static_cast<int>(offset.size()) != a.ambient_dimension()) {
    fail(errc::dimension_mismatch, "offset arity mismatch");
  }
  switch (a.kind()) {
    case SetModel::Kind::finite_points: {
      std::vector<Point> moved = a.as_points().points();
      for (Point& p : moved) {
        for (std::size_t c = 0; c < offset.size(); ++c) p[c] += offset[c];
      }
      return SetModel(FinitePoints(a.ambient_dimension(), std::move(moved)));
    }
    case SetModel::Kind::box: {
      std::vector<Interval> sides = a.as_box().sides();
      for (std::size_t c = 0; c < sides.size(); ++c) {
        sides[c].lo += offset[c];
        sides[c].hi += offset[c];
      }
      return SetModel(Box(std::move(sides)));
    }
    default:
      fail(errc::unsupported_model,
           "translation is defined for point sets and boxes");
  }
}

SetModel union_disjoint(const SetModel& a, const SetModel& b) {
  const FinitePoints& fa = a.as_points();
  const FinitePoints& fb = b.as_points();
  if (fa.dimension() != fb.dimension()) {
    fail(errc::dimension_mismatch, "union of point sets in different dimensions");
  }
  for (const Point& p : fa.points()) {
    if (fb.contains(p)) {
      fail(errc::not_disjoint,
           "sets share the point " + point_text(p));
    }
  }
  std::vector<Point> merged = fa.points();
  merged.insert(merged.end(), fb.points().begin(), fb.points().end());
  return SetModel(FinitePoints(fa.dimension(), std::move(merged)));
}

SetModel cartesian_product(const SetModel& a, const SetModel& b) {
  const FinitePoints& fa = a.as_points();
  const FinitePoints& fb = b.as_points();
  std::vector<Point> out;
  out.reserve(fa.size() * fb.size());
  for (const Point& pa : fa.points()) {
    for (const Point& pb : fb.points()) {
      Point joined = pa;
      joined.insert(joined.end(), pb.begin(), pb.end());
      out.push_back(std::move(joined));
    }
  }
  return SetModel(FinitePoints(fa.dimension() + fb.dimension(), std::move(out)));
}

Rational min_gap(const SetModel& a) {
  const FinitePoints& fp = a.as_points();
  const auto& pts = fp.points();
  if (pts.size() < 2) {
    fail(errc::too_few_points, "min_gap needs >= 2 points");
  }
  Rational best;
  bool first = true;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Rational cheby = 0;
      for (std::size_t c = 0; c < pts[i].size(); ++c) {
        Rational d = pts[i][c] - pts[j][c];
        if (d < 0) d = -d;
        if (d > cheby) cheby = d;
      }
      if (first || cheby < best) {
        best = cheby;
        first = false;
      }
    }
  }
  return best;
}

bool is_subset(const SetModel& a, const SetModel& b) {
  const FinitePoints& fa = a.as_points();
  const FinitePoints& fb = b.as_points();
  if (fa.dimension() != fb.dimension()) return false;
  return std::includes(fb.points().begin(), fb.points().end(),
                       fa.points().begin(), fa.points().end());
}

SetModel ifs_preset(std::string_view name) {
  if (name == "cantor") {
    return SetModel(IfsFractal(1, 3, {{0}, {2}}));
  }
  if (name == "sierpinski") {
    return SetModel(IfsFractal(2, 2, {{0, 0}, {1, 0}, {0, 1}}));
  }
  fail(errc::invalid_config, "unknown preset '" + std::string(name) +
                                 "' (expected cantor or sierpinski)");
}

}  // namespace setmeter
