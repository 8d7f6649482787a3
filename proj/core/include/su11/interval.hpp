#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace su11 {

/// Closed interval [lo, hi] used for certified enclosures. Arithmetic is the
/// usual outward-combining interval arithmetic for nonnegative quantities;
/// a relative float-slop pad absorbs accumulated rounding.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double v) : lo(v), hi(v) {}
    Interval(double l, double h) : lo(l), hi(h) {
        if (!(l <= h)) throw std::logic_error("Interval: lo > hi");
    }

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double v) const { return lo <= v && v <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }

    Interval& operator+=(const Interval& o) {
        lo += o.lo;
        hi += o.hi;
        return *this;
    }
    friend Interval operator+(Interval a, const Interval& b) { return a += b; }
    friend Interval operator-(const Interval& a, const Interval& b) {
        return Interval(a.lo - b.hi, a.hi - b.lo);
    }

    /// Scale by a nonnegative factor.
    friend Interval operator*(double c, const Interval& a) {
        if (c < 0) throw std::logic_error("Interval: negative scale");
        return Interval(c * a.lo, c * a.hi);
    }

    /// Widen by a relative float-slop margin.
    Interval padded(double rel = 1e-12) const {
        double m = std::max(std::abs(lo), std::abs(hi)) * rel + 1e-300;
        return Interval(lo - m, hi + m);
    }
};

}  // namespace su11
