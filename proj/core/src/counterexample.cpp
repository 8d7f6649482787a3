#include "su11/counterexample.hpp"

#include <cmath>
#include <stdexcept>

namespace su11 {

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::domain_error("loglog_slope: need at least two samples");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = double(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        double lx = std::log(std::abs(x[i]));
        double ly = std::log(std::abs(y[i]));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

GrowthReport counterexample_growth(HalfInt l, const std::vector<std::int64_t>& m_values) {
    FiberLabel fiber = FiberLabel::discrete(-1, l);
    auto [re, im] = real_imag_parts(Rational(1, 3));
    NumericSpinBanded re_f = spin_to_fiber(re, fiber);
    NumericSpinBanded im_f = spin_to_fiber(im, fiber);
    NumericSpinBanded comm = re_f * im_f - im_f * re_f;

    GrowthReport rep;
    rep.l = l;
    rep.closed_form_matches = true;
    std::vector<double> absm, nums, dens, ratios;

    const double ld = l.to_double();
    for (std::int64_t m : m_values) {
        if (!fiber.in_support(fiber.weight(m)) || !fiber.in_support(fiber.weight(m + 1)))
            throw std::domain_error("counterexample_growth: m outside the weight support");
        std::vector<SpinVectorEntry> x{{0, m, Cplx{1.0, 0.0}}, {1, m + 1, Cplx{1.0, 0.0}}};
        double nx = norm_squared(x);
        double ncomm = norm_squared(apply_banded(comm, fiber, x));
        double nre = norm_squared(apply_banded(re_f, fiber, x));
        double nim = norm_squared(apply_banded(im_f, fiber, x));

        GrowthRow row;
        row.m = m;
        row.q_num = ncomm / nx;
        row.q_den = (nx + nre + nim) / nx;
        row.ratio = row.q_num / row.q_den;
        // Closed forms as displayed for l = 1: -(1/4)(-2m-1)^2 (1-m)(-m-2) and
        // 1 + (m+1/2)^2/2 - (1-m)(-m-2)/2, evaluated with the actual label l.
        const double md = double(m);
        row.closed_num = -0.25 * std::pow(-2 * md - 1, 2) * (ld - md) * (-ld - md - 1);
        row.closed_den = 1 + 0.5 * std::pow(md + 0.5, 2) - 0.5 * (ld - md) * (-ld - md - 1);
        rep.rows.push_back(row);

        if (std::abs(row.q_num - row.closed_num) > 1e-9 * std::max(1.0, std::abs(row.closed_num)) ||
            std::abs(row.q_den - row.closed_den) > 1e-9 * std::max(1.0, std::abs(row.closed_den)))
            rep.closed_form_matches = false;

        absm.push_back(std::abs(md));
        nums.push_back(row.q_num);
        dens.push_back(row.q_den);
        ratios.push_back(row.ratio);
    }
    rep.num_exponent = loglog_slope(absm, nums);
    rep.den_exponent = loglog_slope(absm, dens);
    rep.ratio_exponent = loglog_slope(absm, ratios);
    return rep;
}

}  // namespace su11
