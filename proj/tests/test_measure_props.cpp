#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "setmeter/cover.hpp"
#include "setmeter/error.hpp"
#include "setmeter/measure_checks.hpp"

using namespace setmeter;

namespace {

SetModel points1d(std::initializer_list<int> coords) {
  std::vector<Point> pts;
  for (int c : coords) pts.push_back({Rational(c)});
  return SetModel(FinitePoints(1, std::move(pts)));
}

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return errc::invalid_value;
}

}  // namespace

TEST_CASE("non-negativity instances") {
  const SetModel empty{FinitePoints(1, {})};
  CHECK(check_nonnegativity(empty, Rational(1, 2)).passed());
  CHECK(check_nonnegativity(points1d({0}), Rational(1, 2)).passed());
  CHECK(check_nonnegativity(ifs_preset("cantor"), Rational(1, 9)).passed());
  CHECK(grid_cover(ifs_preset("cantor"), Rational(1, 9)).count() == 4);
}

TEST_CASE("monotonicity instances") {
  CHECK(check_monotonicity(points1d({0}), points1d({0, 5}), Rational(1)).passed());
  CHECK(check_monotonicity(SetModel(FinitePoints(1, {})), points1d({1, 2}),
                           Rational(1, 3))
            .passed());
  CHECK(code_of([] {
          check_monotonicity(points1d({9}), points1d({0, 5}), Rational(1));
        }) == errc::not_a_subset);
}

TEST_CASE("subadditivity instances") {
  // overlap at the shared point makes the inequality strict: 3 <= 4
  const std::vector<SetModel> overlapping = {points1d({0, 1}), points1d({1, 2})};
  const PropertyReport strict = check_subadditivity(overlapping, Rational(1, 2));
  CHECK(strict.passed());
  CHECK(grid_cover(points1d({0, 1, 2}), Rational(1, 2)).count() == 3);

  // disjoint well-separated parts give exact equality
  const std::vector<SetModel> separated = {points1d({0}), points1d({100})};
  CHECK(check_subadditivity(separated, Rational(1, 2)).passed());
}

TEST_CASE("graduation-1 additivity instances") {
  CHECK(check_additivity_graduation1(
            {points1d({0}), points1d({1}), points1d({2})})
            .passed());
  CHECK(check_additivity_graduation1({points1d({3, 4})}).passed());
  CHECK(code_of([] {
          check_additivity_graduation1({points1d({0, 1}), points1d({1, 2})});
        }) == errc::not_disjoint);
}

TEST_CASE("seeded harness passes on every generated instance") {
  const TrialSummary summary = run_property_trials(42, 300);
  CHECK(summary.all_passed());
  CHECK(summary.non_negativity.instances == 300);
  CHECK(summary.monotonicity.instances == 300);
  CHECK(summary.subadditivity.instances == 300);
  CHECK(summary.additivity_graduation1.instances == 300);
}

TEST_CASE("harness is deterministic in the seed") {
  const TrialSummary a = run_property_trials(7, 50);
  const TrialSummary b = run_property_trials(7, 50);
  CHECK(a.non_negativity.instances == b.non_negativity.instances);
  CHECK(a.all_passed() == b.all_passed());
}

// Mutation check: a counting rule that tallies union boxes twice. The
// subadditivity inequality can survive the mutant on heavily overlapping
// families, while graduation-1 additivity rejects it on any non-empty
// disjoint family. Additivity is the discriminating property.
TEST_CASE("double-counting mutant is caught by additivity, not subadditivity") {
  auto mutant_union_count = [](const std::vector<SetModel>& parts,
                               const Rational& r) {
    std::vector<Point> all;
    for (const SetModel& part : parts) {
      const auto& pts = part.as_points().points();
      all.insert(all.end(), pts.begin(), pts.end());
    }
    const FinitePoints merged(parts.front().ambient_dimension(), all);
    return BigInt(2) * grid_cover(SetModel(merged), r).count();
  };

  // heavy overlap: the mutant still satisfies 2*N_union <= sum of counts
  const std::vector<SetModel> overlapping = {
      points1d({0, 1}), points1d({0, 1}), points1d({0, 1})};
  const Rational r(1, 2);
  BigInt sum = 0;
  for (const SetModel& part : overlapping) {
    sum += grid_cover(part, r).count();
  }
  CHECK(mutant_union_count(overlapping, r) <= sum);  // mutant slips through

  // any disjoint family: mutant additivity 2*|union| == sum fails
  const std::vector<SetModel> disjoint = {points1d({0}), points1d({5}),
                                          points1d({9})};
  BigInt point_sum = 0;
  for (const SetModel& part : disjoint) {
    point_sum += BigInt(part.as_points().size());
  }
  const BigInt mutant_points =
      BigInt(2) * BigInt(union_disjoint(union_disjoint(disjoint[0], disjoint[1]),
                                        disjoint[2])
                             .as_points()
                             .size());
  CHECK(mutant_points != point_sum);  // additivity flags the mutant
  // and the real counting rule passes
  CHECK(check_additivity_graduation1(disjoint).passed());
}

TEST_CASE("failure descriptors carry reproduction data") {
  // force a failure record through the report type itself
  PropertyReport report{"demo", 1, {}};
  report.failures.push_back({"{0,1}", "1/2", "3, 2", "demo failure"});
  CHECK_FALSE(report.passed());
  PropertyReport other{"demo", 2, {}};
  other.merge(report);
  CHECK(other.instances == 3);
  CHECK(other.failures.size() == 1);
  CHECK(other.failures[0].scale == "1/2");
}
