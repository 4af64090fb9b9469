#pragma once

// Executable oracles for the outer-measure behaviour of grid counting:
// non-negativity, monotonicity, subadditivity, and exact additivity of the
// graduation-1 point count over disjoint families. Each checker examines one
// instance; run_property_trials drives them over seeded generators.
//
// All four properties hold unconditionally for the implemented semantics, so
// any recorded failure is a defect, not a statistical event.

#include <cstdint>
#include <string>
#include <vector>

#include "setmeter/numeric.hpp"
#include "setmeter/set_model.hpp"

namespace setmeter {

struct FailureCase {
  std::string sets;
  std::string scale;
  std::string counts;
  std::string detail;
};

struct PropertyReport {
  std::string property;
  std::uint64_t instances = 0;
  std::vector<FailureCase> failures;

  bool passed() const { return failures.empty(); }
  void merge(const PropertyReport& other);
};

// count(empty) = 0 and count(s) >= 0 at scale r.
PropertyReport check_nonnegativity(const SetModel& s, const Rational& r);

// a subset of b implies N_a(r) <= N_b(r); throws errc::not_a_subset.
PropertyReport check_monotonicity(const SetModel& a, const SetModel& b,
                                  const Rational& r);

// N(union) <= sum of the part counts at scale r.
PropertyReport check_subadditivity(const std::vector<SetModel>& parts,
                                   const Rational& r);

// Exact point-count additivity over pairwise-disjoint point sets; throws
// errc::not_disjoint on overlap.
PropertyReport check_additivity_graduation1(const std::vector<SetModel>& parts);

struct TrialSummary {
  std::uint64_t seed = 0;
  PropertyReport non_negativity;
  PropertyReport monotonicity;
  PropertyReport subadditivity;
  PropertyReport additivity_graduation1;

  bool all_passed() const;
};

// Runs `trials` generated instances per property, deterministically in seed.
TrialSummary run_property_trials(std::uint64_t seed, std::uint32_t trials);

}  // namespace setmeter
