#pragma once

#include <cstdint>
#include <vector>

#include "su11/fiber_map.hpp"

namespace su11 {

/// Dense finite section of a spinor-valued banded operator over the integer
/// index window [m_min, m_max] intersected with the fiber's weight support.
/// Entries whose row and column indices both lie in the window agree with the
/// banded operator; products of finite sections are only trustworthy on
/// entries at distance >= the total ladder degree from the window edges.
class TruncatedMatrix {
public:
    TruncatedMatrix(const NumericSpinBanded& op, const FiberLabel& fiber, std::int64_t m_min,
                    std::int64_t m_max);

    const FiberLabel& fiber() const { return fiber_; }
    std::int64_t m_min() const { return m_min_; }
    std::int64_t m_max() const { return m_max_; }
    std::int64_t width() const { return m_max_ - m_min_ + 1; }
    std::int64_t dim() const { return 2 * width(); }

    Cplx at(int comp_row, std::int64_t m_row, int comp_col, std::int64_t m_col) const;
    Cplx at_flat(std::int64_t r, std::int64_t c) const { return a_[size_t(r * dim() + c)]; }

    bool is_diagonal(double tol) const;
    double max_offdiag() const;

    /// Dense product, for interior-window comparisons.
    friend TruncatedMatrix operator*(const TruncatedMatrix& x, const TruncatedMatrix& y);
    friend TruncatedMatrix operator-(const TruncatedMatrix& x, const TruncatedMatrix& y);

    /// Max |entry| over rows/cols whose m-index is at least `margin` away from
    /// both window edges.
    double max_abs_interior(std::int64_t margin) const;
    double max_abs() const;

private:
    TruncatedMatrix(const FiberLabel& fiber, std::int64_t m_min, std::int64_t m_max);

    FiberLabel fiber_;
    std::int64_t m_min_, m_max_;
    std::vector<Cplx> a_;
};

/// Banded operator applied to a finitely-supported spinor vector given as
/// (component, m-index, value) triples; exact band arithmetic, no window.
struct SpinVectorEntry {
    int comp;
    std::int64_t m;
    Cplx value;
};
std::vector<SpinVectorEntry> apply_banded(const NumericSpinBanded& op, const FiberLabel& fiber,
                                          const std::vector<SpinVectorEntry>& x);
double norm_squared(const std::vector<SpinVectorEntry>& x);

}  // namespace su11
