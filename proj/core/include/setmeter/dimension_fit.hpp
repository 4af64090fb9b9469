#pragma once

// Least-squares estimate of the box-counting dimension: slope of ln N
// against ln(1/r) over a scale sweep. The fit window is every sample with
// count >= 2; the degenerate counts 0 and 1 carry no slope information.

#include <cstddef>
#include <vector>

#include "setmeter/numeric.hpp"

namespace setmeter {

struct DimSample {
  Rational scale;
  BigInt count;
};

struct DimensionFit {
  std::vector<DimSample> samples;  // the full sweep, in sweep order
  std::size_t samples_used = 0;    // counts >= 2
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

// Throws errc::insufficient_samples when fewer than two samples are usable.
DimensionFit fit_dimension(std::vector<DimSample> samples);

}  // namespace setmeter
