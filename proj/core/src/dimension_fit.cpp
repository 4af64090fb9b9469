#include "setmeter/dimension_fit.hpp"

#include "setmeter/error.hpp"

namespace setmeter {

DimensionFit fit_dimension(std::vector<DimSample> samples) {
  DimensionFit fit;
  fit.samples = std::move(samples);

  std::vector<double> xs, ys;
  for (const DimSample& s : fit.samples) {
    if (s.count < 2) continue;
    xs.push_back(-log_rational(s.scale));  // ln(1/r)
    ys.push_back(log_big(s.count));
  }
  fit.samples_used = xs.size();
  if (fit.samples_used < 2) {
    fail(errc::insufficient_samples,
         "dimension fit needs >= 2 scales with count >= 2, got " +
             std::to_string(fit.samples_used));
  }

  const double n = static_cast<double>(xs.size());
  double mean_x = 0, mean_y = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= n;
  mean_y /= n;

  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
  }
  if (sxx == 0) {
    fail(errc::insufficient_samples, "all usable scales coincide");
  }
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;

  double ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double predicted = fit.intercept + fit.slope * xs[i];
    ss_res += (ys[i] - predicted) * (ys[i] - predicted);
    ss_tot += (ys[i] - mean_y) * (ys[i] - mean_y);
  }
  fit.r_squared = ss_tot == 0 ? 1.0 : 1.0 - ss_res / ss_tot;
  return fit;
}

}  // namespace setmeter
