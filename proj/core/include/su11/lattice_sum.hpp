#pragma once

#include <cstdint>

#include "su11/interval.hpp"

namespace su11 {

/// Certified enclosure of the tail integral I(w) = int_w^inf (x^2+g)^(-q/2) dx
/// for q > 1 and w > 0 with w^2 > 2|g|, via the binomial expansion
/// (x^2+g)^(-q/2) = sum_j binom(-q/2, j) g^j x^(-q-2j) integrated termwise.
/// The truncation remainder is controlled by the term-ratio bound.
Interval tail_integral_series(double w, double g, double q);

/// Certified enclosure of int_w^inf (x^2+g)^(-q/2) dx for any w > 0 with
/// w^2 + g > 0. Uses the series fast path when w^2 >= 2|g| and otherwise a
/// midpoint/trapezoid sandwich on [w, W] (splitting at the inflection point
/// when the integrand changes convexity) plus the series tail from W.
Interval integral_inv_power_quadratic(double w, double g, double q);

/// Certified enclosure of sum_{k>=kmin} ((k+s)^2 + g)^(-q/2) for q > 1.
/// Exact head plus an Euler-Maclaurin tail whose remainder after the B2 term
/// is bounded through the third derivative (single-signed on the tail
/// domain). `terms` returns the number of exactly summed lattice terms.
Interval sum_inv_power_quadratic(double s, double g, double q, std::int64_t kmin,
                                 std::int64_t* terms = nullptr);

/// Certified enclosure of sum_{m in Z} ((m+u0)^2 + g)^(-q/2) with u0 in
/// {0, 1/2} and g > 0.
Interval lattice_sum_over_Z(double u0, double g, double q, std::int64_t* terms = nullptr);

}  // namespace su11
