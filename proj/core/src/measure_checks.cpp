#include "setmeter/measure_checks.hpp"

#include <algorithm>
#include <random>

#include "setmeter/cover.hpp"
#include "setmeter/error.hpp"

namespace setmeter {

void PropertyReport::merge(const PropertyReport& other) {
  instances += other.instances;
  failures.insert(failures.end(), other.failures.begin(),
                  other.failures.end());
}

namespace {

BigInt grid_count(const SetModel& s, const Rational& r) {
  return grid_cover(s, r).count();
}

std::string counts_text(std::initializer_list<BigInt> counts) {
  std::string out;
  for (const BigInt& c : counts) {
    if (!out.empty()) out += ", ";
    out += c.str();
  }
  return out;
}

}  // namespace

PropertyReport check_nonnegativity(const SetModel& s, const Rational& r) {
  PropertyReport report{"non_negativity", 1, {}};
  const SetModel empty(FinitePoints(s.ambient_dimension(), {}));
  const BigInt empty_count = grid_count(empty, r);
  const BigInt set_count = grid_count(s, r);
  if (empty_count != 0) {
    report.failures.push_back({empty.describe(), to_text(r),
                               empty_count.str(),
                               "count of the empty set is not 0"});
  }
  if (set_count < 0) {
    report.failures.push_back(
        {s.describe(), to_text(r), set_count.str(), "negative count"});
  }
  return report;
}

PropertyReport check_monotonicity(const SetModel& a, const SetModel& b,
                                  const Rational& r) {
  if (!is_subset(a, b)) {
    fail(errc::not_a_subset,
         a.describe() + " is not a subset of " + b.describe());
  }
  PropertyReport report{"monotonicity", 1, {}};
  const BigInt na = grid_count(a, r);
  const BigInt nb = grid_count(b, r);
  if (na > nb) {
    report.failures.push_back({a.describe() + " subset of " + b.describe(),
                               to_text(r), counts_text({na, nb}),
                               "subset count exceeds superset count"});
  }
  return report;
}

PropertyReport check_subadditivity(const std::vector<SetModel>& parts,
                                   const Rational& r) {
  PropertyReport report{"subadditivity", 1, {}};
  if (parts.empty()) return report;

  const int dim = parts.front().ambient_dimension();
  std::vector<Point> all;
  BigInt sum = 0;
  std::string described;
  for (const SetModel& part : parts) {
    const FinitePoints& fp = part.as_points();
    if (fp.dimension() != dim) {
      fail(errc::dimension_mismatch, "parts live in different dimensions");
    }
    all.insert(all.end(), fp.points().begin(), fp.points().end());
    sum += grid_count(part, r);
    if (!described.empty()) described += " | ";
    described += part.describe();
  }
  const SetModel whole(FinitePoints(dim, std::move(all)));
  const BigInt n_union = grid_count(whole, r);
  if (n_union > sum) {
    report.failures.push_back({described, to_text(r),
                               counts_text({n_union, sum}),
                               "union count exceeds the sum of part counts"});
  }
  return report;
}

PropertyReport check_additivity_graduation1(
    const std::vector<SetModel>& parts) {
  PropertyReport report{"additivity_graduation1", 1, {}};
  if (parts.empty()) return report;

  const int dim = parts.front().ambient_dimension();
  BigInt sum = 0;
  std::vector<Point> all;
  std::string described;
  for (const SetModel& part : parts) {
    const FinitePoints& fp = part.as_points();
    if (fp.dimension() != dim) {
      fail(errc::dimension_mismatch, "parts live in different dimensions");
    }
    sum += fp.size();
    all.insert(all.end(), fp.points().begin(), fp.points().end());
    if (!described.empty()) described += " | ";
    described += part.describe();
  }
  // a shared point collapses under set semantics, so the union count drops
  const FinitePoints merged(dim, std::move(all));
  if (BigInt(merged.size()) < sum) {
    fail(errc::not_disjoint, "parts share a point: " + described);
  }
  const BigInt total = BigInt(merged.size());
  if (total != sum) {
    report.failures.push_back(
        {described, "graduation 1", counts_text({total, sum}),
         "union point count differs from the sum of part counts"});
  }
  return report;
}

namespace {

// Deterministic across platforms: raw engine output only, no distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next(std::uint64_t bound) { return engine_() % bound; }
  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(next(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 engine_;
};

Rational random_coordinate(Rng& rng) {
  static const int denominators[] = {1, 1, 1, 2, 2, 3, 4, 5, 8, 10};
  const int num = rng.range(-60, 60);
  const int den = denominators[rng.next(std::size(denominators))];
  return Rational(num, den);
}

FinitePoints random_points(Rng& rng, int dim, int max_points) {
  const int n = rng.range(0, max_points);
  std::vector<Point> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    Point p;
    p.reserve(dim);
    for (int c = 0; c < dim; ++c) p.push_back(random_coordinate(rng));
    pts.push_back(std::move(p));
  }
  return FinitePoints(dim, std::move(pts));
}

Rational random_scale(Rng& rng) {
  static const std::pair<int, int> scales[] = {
      {1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 7},
      {1, 10}, {1, 12}, {2, 3}, {3, 7}, {5, 2}, {3, 1}};
  const auto& [p, q] = scales[rng.next(std::size(scales))];
  return Rational(p, q);
}

// Pairwise-disjoint parts drawn from distinct integer-grid points.
std::vector<SetModel> random_disjoint_family(Rng& rng, int max_parts,
                                             int max_points_per_part) {
  const int dim = rng.range(1, 2);
  const int parts = rng.range(1, max_parts);
  const int span = std::max(8 * parts * max_points_per_part, 64);
  std::set<std::vector<int>> seen;
  auto fresh_point = [&] {
    while (true) {
      std::vector<int> raw(dim);
      for (int c = 0; c < dim; ++c) raw[c] = rng.range(-span, span);
      if (seen.insert(raw).second) {
        Point p;
        p.reserve(dim);
        for (int c = 0; c < dim; ++c) p.emplace_back(raw[c]);
        return p;
      }
    }
  };
  std::vector<SetModel> family;
  family.reserve(parts);
  for (int i = 0; i < parts; ++i) {
    const int n = rng.range(0, max_points_per_part);
    std::vector<Point> bucket;
    bucket.reserve(n);
    for (int j = 0; j < n; ++j) bucket.push_back(fresh_point());
    family.emplace_back(FinitePoints(dim, std::move(bucket)));
  }
  return family;
}

}  // namespace

bool TrialSummary::all_passed() const {
  return non_negativity.passed() && monotonicity.passed() &&
         subadditivity.passed() && additivity_graduation1.passed();
}

TrialSummary run_property_trials(std::uint64_t seed, std::uint32_t trials) {
  TrialSummary summary;
  summary.seed = seed;
  summary.non_negativity = {"non_negativity", 0, {}};
  summary.monotonicity = {"monotonicity", 0, {}};
  summary.subadditivity = {"subadditivity", 0, {}};
  summary.additivity_graduation1 = {"additivity_graduation1", 0, {}};

  Rng rng(seed);
  for (std::uint32_t t = 0; t < trials; ++t) {
    {
      // occasionally measure a preset at an aligned scale for variety
      if (rng.next(8) == 0) {
        const int k = rng.range(0, 5);
        BigInt den = boost::multiprecision::pow(BigInt(3), k);
        summary.non_negativity.merge(check_nonnegativity(
            ifs_preset("cantor"), Rational(BigInt(1), den)));
      } else {
        const int dim = rng.range(1, 3);
        summary.non_negativity.merge(
            check_nonnegativity(random_points(rng, dim, 40), random_scale(rng)));
      }
    }
    {
      const int dim = rng.range(1, 3);
      const FinitePoints b = random_points(rng, dim, 60);
      std::vector<Point> kept;
      for (const Point& p : b.points()) {
        if (rng.next(2) == 0) kept.push_back(p);
      }
      const SetModel a(FinitePoints(dim, std::move(kept)));
      summary.monotonicity.merge(
          check_monotonicity(a, SetModel(b), random_scale(rng)));
    }
    {
      const int dim = rng.range(1, 2);
      const int parts = rng.range(1, 5);
      std::vector<SetModel> family;
      family.reserve(parts);
      for (int i = 0; i < parts; ++i) {
        family.emplace_back(random_points(rng, dim, 30));
      }
      summary.subadditivity.merge(
          check_subadditivity(family, random_scale(rng)));
    }
    {
      // mostly small families; every tenth trial uses the full ranges
      const bool large = rng.next(10) == 0;
      summary.additivity_graduation1.merge(check_additivity_graduation1(
          random_disjoint_family(rng, large ? 50 : 8, large ? 100 : 20)));
    }
  }
  return summary;
}

}  // namespace setmeter
