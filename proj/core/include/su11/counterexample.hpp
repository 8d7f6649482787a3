#pragma once

#include <vector>

#include "su11/truncated.hpp"

namespace su11 {

/// One row of the commutator-growth table for the spinor sequence
/// x_m = (basis at weight m', basis at weight m'+1) on a negative discrete
/// fiber: q_num = ||[Re D, Im D] x||^2 / ||x||^2 and
/// q_den = (||x||^2 + ||Re D x||^2 + ||Im D x||^2) / ||x||^2.
struct GrowthRow {
    std::int64_t m;
    double q_num;
    double q_den;
    double ratio;
    // Closed-form values printed alongside for comparison; they are recorded
    // annotations, not assertions (see GrowthReport::closed_form_matches).
    double closed_num;
    double closed_den;
};

struct GrowthReport {
    HalfInt l;
    std::vector<GrowthRow> rows;
    double num_exponent;       // log-log least-squares slope of q_num vs |m|
    double den_exponent;       // slope of q_den
    double ratio_exponent;     // slope of q_num / q_den
    bool closed_form_matches;  // fiber values reproduce the closed forms
};

/// Computes the growth table over the given m values (each m and m+1 must lie
/// in the support of the negative discrete fiber with label l).
GrowthReport counterexample_growth(HalfInt l, const std::vector<std::int64_t>& m_values);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace su11
