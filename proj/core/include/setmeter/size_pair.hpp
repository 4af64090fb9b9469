#pragma once

// The measurement result (r, N(r)): a scale together with the count of cover
// elements at that scale. Arithmetic is defined at a shared scale only; the
// zero count makes the zero pair regardless of scale.

#include <compare>
#include <string>
#include <string_view>

#include "setmeter/mvalue.hpp"
#include "setmeter/scale.hpp"

namespace setmeter {

struct SizePair {
  Scale scale;
  MValue count;

  SizePair(Scale s, MValue c) : scale(std::move(s)), count(std::move(c)) {}

  bool is_zero() const {
    return count.is_finite() && count.finite_value() == 0;
  }

  // Zero pairs are equal to each other across scales.
  bool operator==(const SizePair& other) const;

  // "(p/q,N)"; "(0+,N)" for the limit marker.
  std::string to_text() const;
};

// (r, Nx + Ny); throws errc::scale_mismatch across scales.
SizePair add(const SizePair& x, const SizePair& y);

// (r, Nx - Ny); requires Ny <= Nx.
SizePair sub(const SizePair& x, const SizePair& y);

// (r*r, Nx * Ny); rational scales only.
SizePair mul(const SizePair& x, const SizePair& y);

// c . y = (r, Ny^c) for non-negative rational c, finite Ny != 1, and integer
// result. Throws errc::unit_count_excluded and errc::non_integer_power.
SizePair scalar_mul(const Rational& c, const SizePair& y);

// (r, |Nx - Ny|) for finite counts at a shared scale.
SizePair distance(const SizePair& x, const SizePair& y);

// ln(N) / ln(1/r) for rational r < 1 and finite N >= 2.
double dimension(const SizePair& x);

// Counts are compared at a shared scale; different scales are unordered
// except for zero pairs, which are equivalent everywhere.
std::partial_ordering compare(const SizePair& x, const SizePair& y);

inline SizePair operator+(const SizePair& x, const SizePair& y) { return add(x, y); }
inline SizePair operator-(const SizePair& x, const SizePair& y) { return sub(x, y); }
inline SizePair operator*(const SizePair& x, const SizePair& y) { return mul(x, y); }

SizePair parse_size_pair(std::string_view text);

}  // namespace setmeter
