#include "setmeter/cover.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "setmeter/error.hpp"

namespace setmeter {

Cover Cover::grid(Scale scale, std::set<BoxIndex> boxes) {
  return Cover(std::move(scale), GridIndices{std::move(boxes)});
}

Cover Cover::grid_ranges(Scale scale,
                         std::vector<std::pair<BigInt, BigInt>> ranges) {
  return Cover(std::move(scale), GridRanges{std::move(ranges)});
}

Cover Cover::ifs(Scale scale, IfsFractal model, unsigned depth) {
  return Cover(std::move(scale), IfsDepth{std::move(model), depth});
}

Cover Cover::explicit_cover(Scale scale, std::vector<SetModel> elements) {
  return Cover(std::move(scale), Explicit{std::move(elements)});
}

BigInt Cover::count() const {
  struct Visitor {
    BigInt operator()(const GridIndices& g) const {
      return BigInt(g.boxes.size());
    }
    BigInt operator()(const GridRanges& g) const {
      BigInt total = 1;
      for (const auto& [lo, hi] : g.ranges) total *= hi - lo + 1;
      return total;
    }
    BigInt operator()(const IfsDepth& g) const {
      return boost::multiprecision::pow(BigInt(g.model.branching()), g.depth);
    }
    BigInt operator()(const Explicit& g) const {
      return BigInt(g.elements.size());
    }
  };
  return std::visit(Visitor{}, rep_);
}

std::set<BoxIndex> Cover::box_indices(std::size_t limit) const {
  if (count() > limit) {
    fail(errc::cover_too_large,
         "cover with " + count().str() + " elements exceeds the " +
             std::to_string(limit) + " element enumeration limit");
  }
  if (const auto* g = std::get_if<GridIndices>(&rep_)) return g->boxes;
  if (const auto* g = std::get_if<GridRanges>(&rep_)) {
    std::set<BoxIndex> out;
    BoxIndex current;
    current.reserve(g->ranges.size());
    // odometer walk over the product of ranges
    auto walk = [&](auto&& self, std::size_t axis) -> void {
      if (axis == g->ranges.size()) {
        out.insert(current);
        return;
      }
      for (BigInt k = g->ranges[axis].first; k <= g->ranges[axis].second; ++k) {
        current.push_back(k);
        self(self, axis + 1);
        current.pop_back();
      }
    };
    walk(walk, 0);
    return out;
  }
  if (const auto* g = std::get_if<IfsDepth>(&rep_)) {
    const int d = g->model.dimension();
    const int m = g->model.subdivision();
    std::set<BoxIndex> cells;
    cells.insert(BoxIndex(d, BigInt(0)));
    for (unsigned level = 0; level < g->depth; ++level) {
      std::set<BoxIndex> next;
      for (const BoxIndex& cell : cells) {
        for (const auto& offset : g->model.offsets()) {
          BoxIndex child(d);
          for (int c = 0; c < d; ++c) {
            child[c] = cell[c] * m + offset[c];
          }
          next.insert(std::move(child));
        }
      }
      cells = std::move(next);
    }
    return cells;
  }
  fail(errc::unsupported_model, "explicit covers have no grid indices");
}

const std::vector<SetModel>* Cover::explicit_elements() const {
  if (const auto* g = std::get_if<Explicit>(&rep_)) return &g->elements;
  return nullptr;
}

namespace {

BoxIndex cell_of(const Point& p, const Rational& r) {
  BoxIndex idx;
  idx.reserve(p.size());
  for (const Rational& coordinate : p) {
    idx.push_back(floor_quotient(coordinate, r));
  }
  return idx;
}

std::set<BoxIndex> point_cells(const std::vector<Point>& pts,
                               const Rational& r, int workers) {
  const std::size_t n = pts.size();
  if (workers <= 1 || n < 2048) {
    std::set<BoxIndex> cells;
    for (const Point& p : pts) cells.insert(cell_of(p, r));
    return cells;
  }
  const std::size_t parts = std::min<std::size_t>(workers, n);
  std::vector<std::future<std::set<BoxIndex>>> futures;
  futures.reserve(parts);
  for (std::size_t w = 0; w < parts; ++w) {
    const std::size_t begin = n * w / parts;
    const std::size_t end = n * (w + 1) / parts;
    futures.push_back(std::async(std::launch::async, [&pts, &r, begin, end] {
      std::set<BoxIndex> cells;
      for (std::size_t i = begin; i < end; ++i) {
        cells.insert(cell_of(pts[i], r));
      }
      return cells;
    }));
  }
  std::set<BoxIndex> merged;
  for (auto& f : futures) {
    merged.merge(f.get());
  }
  return merged;
}

// Depth k with r = m^-k, or errc::scale_not_aligned.
unsigned ifs_depth_for_scale(const IfsFractal& model, const Rational& r) {
  const BigInt num = numerator(r);
  BigInt den = denominator(r);
  unsigned depth = 0;
  if (num == 1) {
    while (den % model.subdivision() == 0) {
      den /= model.subdivision();
      ++depth;
    }
    if (den == 1) return depth;
  }
  fail(errc::scale_not_aligned,
       "scale " + to_text(r) + " is not a power of 1/" +
           std::to_string(model.subdivision()));
}

}  // namespace

Cover grid_cover(const SetModel& s, const Rational& r, int workers) {
  if (r <= 0) fail(errc::invalid_value, "scale must be positive");
  Scale scale = Scale::rational(r);
  switch (s.kind()) {
    case SetModel::Kind::finite_points:
      return Cover::grid(std::move(scale),
                         point_cells(s.as_points().points(), r, workers));
    case SetModel::Kind::box: {
      std::vector<std::pair<BigInt, BigInt>> ranges;
      for (const Interval& side : s.as_box().sides()) {
        // cells k with [k*r,(k+1)*r) meeting [lo,hi)
        BigInt lo = floor_quotient(side.lo, r);
        BigInt hi = ceil_quotient(side.hi, r) - 1;
        ranges.emplace_back(std::move(lo), std::move(hi));
      }
      return Cover::grid_ranges(std::move(scale), std::move(ranges));
    }
    case SetModel::Kind::ifs_fractal: {
      const IfsFractal& model = s.as_ifs();
      return Cover::ifs(std::move(scale), model,
                        ifs_depth_for_scale(model, r));
    }
    case SetModel::Kind::naturals:
      fail(errc::unsupported_model,
           "the naturals are measured symbolically, not by grids");
  }
  fail(errc::unsupported_model, "unhandled model kind");
}

CoverCount count(const Cover& c) { return CoverCount{MValue::finite(c.count())}; }

SizePair measure_size(const SetModel& s, const Rational& r, int workers) {
  Cover cover = grid_cover(s, r, workers);
  return SizePair(cover.scale(), MValue::finite(cover.count()));
}

namespace {

bool element_in(const SetModel& e, const std::vector<SetModel>& list) {
  return std::find(list.begin(), list.end(), e) != list.end();
}

bool difference_matches(const std::vector<SetModel>& from,
                        const std::vector<SetModel>& into) {
  for (const SetModel& e : from) {
    bool matched = false;
    for (const SetModel& candidate : into) {
      if (is_translation(e, candidate)) {
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace

bool covers_equivalent(const Cover& c1, const Cover& c2) {
  if (c1.is_grid() && c2.is_grid()) {
    if (!(c1.scale() == c2.scale())) {
      fail(errc::scale_mismatch,
           "grid covers at scales " + c1.scale().to_text() + " and " +
               c2.scale().to_text());
    }
    const std::set<BoxIndex> a = c1.box_indices();
    const std::set<BoxIndex> b = c2.box_indices();
    const bool a_minus_b_empty =
        std::includes(b.begin(), b.end(), a.begin(), a.end());
    const bool b_minus_a_empty =
        std::includes(a.begin(), a.end(), b.begin(), b.end());
    return a_minus_b_empty == b_minus_a_empty;
  }
  const auto* e1 = c1.explicit_elements();
  const auto* e2 = c2.explicit_elements();
  if (!e1 || !e2) {
    fail(errc::unsupported_model,
         "cannot mix grid and explicit covers in an equivalence check");
  }
  std::vector<SetModel> d1, d2;
  for (const SetModel& e : *e1) {
    if (!element_in(e, *e2)) d1.push_back(e);
  }
  for (const SetModel& e : *e2) {
    if (!element_in(e, *e1)) d2.push_back(e);
  }
  return difference_matches(d1, d2) && difference_matches(d2, d1);
}

bool sizes_equivalent_at(const SetModel& s1, const SetModel& s2,
                         const Rational& r) {
  const std::set<BoxIndex> a = grid_cover(s1, r).box_indices();
  std::set<BoxIndex> b = grid_cover(s2, r).box_indices();
  if (a.empty() || b.empty()) return a.empty() == b.empty();
  if (a.begin()->size() != b.begin()->size()) return false;

  const std::size_t d = a.begin()->size();
  auto corner = [d](const std::set<BoxIndex>& cells) {
    BoxIndex low(d);
    bool first = true;
    for (const BoxIndex& cell : cells) {
      for (std::size_t c = 0; c < d; ++c) {
        if (first || cell[c] < low[c]) low[c] = cell[c];
      }
      first = false;
    }
    return low;
  };
  const BoxIndex ca = corner(a);
  const BoxIndex cb = corner(b);

  std::set<BoxIndex> shifted;
  for (const BoxIndex& cell : b) {
    BoxIndex moved(d);
    for (std::size_t c = 0; c < d; ++c) {
      moved[c] = cell[c] - cb[c] + ca[c];
    }
    shifted.insert(std::move(moved));
  }
  return shifted == a;
}

bool sizes_equal(const SetModel& s1, const SetModel& s2) {
  const bool n1 = s1.kind() == SetModel::Kind::naturals;
  const bool n2 = s2.kind() == SetModel::Kind::naturals;
  if (n1 || n2) return n1 == n2;
  if (!s1.is_points() || !s2.is_points()) {
    fail(errc::unsupported_model,
         "graduation-1 equality is defined for point sets and the naturals");
  }
  return s1.as_points().size() == s2.as_points().size();
}

BigInt graduated_count(const BigInt& n, const BigInt& g) {
  if (g < 1) fail(errc::invalid_value, "graduation must be >= 1");
  return ceil_div(n, g);
}

}  // namespace setmeter
