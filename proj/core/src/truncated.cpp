#include "su11/truncated.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace su11 {

TruncatedMatrix::TruncatedMatrix(const FiberLabel& fiber, std::int64_t m_min, std::int64_t m_max)
    : fiber_(fiber), m_min_(m_min), m_max_(m_max) {
    if (m_max_ < m_min_) throw std::domain_error("TruncatedMatrix: empty window");
    a_.assign(size_t(dim() * dim()), Cplx{});
}

TruncatedMatrix::TruncatedMatrix(const NumericSpinBanded& op, const FiberLabel& fiber,
                                 std::int64_t m_min, std::int64_t m_max)
    : TruncatedMatrix(fiber, m_min, m_max) {
    // The effective window is the given window intersected with the support;
    // indices outside the support keep exactly-zero rows and columns.
    bool any = false;
    for (std::int64_t m = m_min_; m <= m_max_; ++m)
        if (fiber_.in_support(fiber_.weight(m))) any = true;
    if (!any) throw std::domain_error("TruncatedMatrix: window misses the weight support");

    const std::int64_t w = width();
    for (int bi = 0; bi < 2; ++bi) {
        for (int bj = 0; bj < 2; ++bj) {
            for (const auto& [offset, f] : op.block[bi][bj].bands()) {
                for (std::int64_t m = m_min_; m <= m_max_; ++m) {
                    std::int64_t mr = m + offset;
                    if (mr < m_min_ || mr > m_max_) continue;
                    Cplx v = f(fiber_.weight(m));
                    if (v == Cplx{}) continue;
                    std::int64_t row = bi * w + (mr - m_min_);
                    std::int64_t col = bj * w + (m - m_min_);
                    a_[size_t(row * dim() + col)] += v;
                }
            }
        }
    }
}

Cplx TruncatedMatrix::at(int comp_row, std::int64_t m_row, int comp_col, std::int64_t m_col) const {
    const std::int64_t w = width();
    std::int64_t r = comp_row * w + (m_row - m_min_);
    std::int64_t c = comp_col * w + (m_col - m_min_);
    return a_[size_t(r * dim() + c)];
}

bool TruncatedMatrix::is_diagonal(double tol) const { return max_offdiag() <= tol; }

double TruncatedMatrix::max_offdiag() const {
    double mx = 0;
    const std::int64_t n = dim();
    for (std::int64_t r = 0; r < n; ++r)
        for (std::int64_t c = 0; c < n; ++c)
            if (r != c) mx = std::max(mx, std::abs(a_[size_t(r * n + c)]));
    return mx;
}

TruncatedMatrix operator*(const TruncatedMatrix& x, const TruncatedMatrix& y) {
    if (x.dim() != y.dim()) throw std::domain_error("TruncatedMatrix: size mismatch");
    TruncatedMatrix r(x.fiber_, x.m_min_, x.m_max_);
    const std::int64_t n = x.dim();
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t k = 0; k < n; ++k) {
            Cplx v = x.a_[size_t(i * n + k)];
            if (v == Cplx{}) continue;
            for (std::int64_t j = 0; j < n; ++j)
                r.a_[size_t(i * n + j)] += v * y.a_[size_t(k * n + j)];
        }
    return r;
}

TruncatedMatrix operator-(const TruncatedMatrix& x, const TruncatedMatrix& y) {
    if (x.dim() != y.dim()) throw std::domain_error("TruncatedMatrix: size mismatch");
    TruncatedMatrix r(x.fiber_, x.m_min_, x.m_max_);
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
    return r;
}

double TruncatedMatrix::max_abs_interior(std::int64_t margin) const {
    double mx = 0;
    const std::int64_t w = width();
    const std::int64_t n = dim();
    auto interior = [&](std::int64_t flat) {
        std::int64_t m = m_min_ + (flat % w);
        return m - m_min_ >= margin && m_max_ - m >= margin;
    };
    for (std::int64_t r = 0; r < n; ++r) {
        if (!interior(r)) continue;
        for (std::int64_t c = 0; c < n; ++c) {
            if (!interior(c)) continue;
            mx = std::max(mx, std::abs(a_[size_t(r * n + c)]));
        }
    }
    return mx;
}

double TruncatedMatrix::max_abs() const {
    double mx = 0;
    for (const auto& v : a_) mx = std::max(mx, std::abs(v));
    return mx;
}

std::vector<SpinVectorEntry> apply_banded(const NumericSpinBanded& op, const FiberLabel& fiber,
                                          const std::vector<SpinVectorEntry>& x) {
    std::map<std::pair<int, std::int64_t>, Cplx> acc;
    for (const auto& e : x) {
        if (!fiber.in_support(fiber.weight(e.m))) continue;
        for (int bi = 0; bi < 2; ++bi) {
            const auto& blk = op.block[bi][e.comp];
            for (const auto& [offset, f] : blk.bands()) {
                Cplx v = f(fiber.weight(e.m));
                if (v == Cplx{}) continue;
                acc[{bi, e.m + offset}] += v * e.value;
            }
        }
    }
    std::vector<SpinVectorEntry> out;
    for (const auto& [k, v] : acc)
        if (v != Cplx{}) out.push_back({k.first, k.second, v});
    return out;
}

double norm_squared(const std::vector<SpinVectorEntry>& x) {
    double s = 0;
    for (const auto& e : x) s += std::norm(e.value);
    return s;
}

}  // namespace su11
