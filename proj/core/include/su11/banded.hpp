#pragma once

#include <functional>
#include <map>

#include "su11/half_int.hpp"

namespace su11 {

/// Banded operator on a weight lattice: a finite set of bands, each an offset
/// d with a coefficient function of the source weight m' (the entry sending
/// the basis vector at m' to the one at m' + d). Coefficients are exactly
/// zero outside the fiber's weight support. K is complex<double> for the
/// numeric path or AlgNumber for the exact principal-series path.
template <class K>
class BandedOperator {
public:
    using Coeff = std::function<K(HalfInt)>;

    BandedOperator() = default;

    static BandedOperator identity(const K& one) {
        BandedOperator r;
        r.bands_[0] = [one](HalfInt) { return one; };
        return r;
    }
    static BandedOperator band(int offset, Coeff f) {
        BandedOperator r;
        r.bands_[offset] = std::move(f);
        return r;
    }

    const std::map<int, Coeff>& bands() const { return bands_; }
    bool empty() const { return bands_.empty(); }

    /// Largest |offset|; the ladder degree used by interior-window tests.
    int ladder_degree() const {
        int d = 0;
        for (const auto& [o, f] : bands_) d = std::max(d, o < 0 ? -o : o);
        return d;
    }

    K coefficient(int offset, HalfInt m_prime) const {
        auto it = bands_.find(offset);
        if (it == bands_.end()) return K{};
        return it->second(m_prime);
    }

    friend BandedOperator operator+(const BandedOperator& x, const BandedOperator& y) {
        BandedOperator r = x;
        for (const auto& [o, f] : y.bands_) {
            auto it = r.bands_.find(o);
            if (it == r.bands_.end()) {
                r.bands_[o] = f;
            } else {
                auto g = it->second;
                it->second = [g, f](HalfInt m) { return g(m) + f(m); };
            }
        }
        return r;
    }

    friend BandedOperator operator-(const BandedOperator& x, const BandedOperator& y) {
        return x + (K(-1) * y);
    }

    friend BandedOperator operator*(const K& c, const BandedOperator& x) {
        BandedOperator r;
        for (const auto& [o, f] : x.bands_)
            r.bands_[o] = [c, f](HalfInt m) { return c * f(m); };
        return r;
    }

    /// Composition x . y (y applied first). Band offsets add; the left factor
    /// is evaluated at the intermediate weight.
    friend BandedOperator operator*(const BandedOperator& x, const BandedOperator& y) {
        BandedOperator r;
        for (const auto& [ox, fx] : x.bands_) {
            for (const auto& [oy, fy] : y.bands_) {
                int o = ox + oy;
                int shift = oy;
                auto term = [fx, fy, shift](HalfInt m) {
                    K first = fy(m);
                    if (first == K{}) return K{};
                    return fx(m + HalfInt(shift)) * first;
                };
                auto it = r.bands_.find(o);
                if (it == r.bands_.end()) {
                    r.bands_[o] = term;
                } else {
                    auto g = it->second;
                    it->second = [g, term](HalfInt m) { return g(m) + term(m); };
                }
            }
        }
        return r;
    }

private:
    std::map<int, Coeff> bands_;
};

/// 2x2 block matrix of banded operators over a common fiber.
template <class K>
struct SpinBanded {
    BandedOperator<K> block[2][2];

    int ladder_degree() const {
        int d = 0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) d = std::max(d, block[i][j].ladder_degree());
        return d;
    }

    friend SpinBanded operator*(const SpinBanded& x, const SpinBanded& y) {
        SpinBanded r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r.block[i][j] = x.block[i][0] * y.block[0][j] + x.block[i][1] * y.block[1][j];
        return r;
    }
    friend SpinBanded operator+(const SpinBanded& x, const SpinBanded& y) {
        SpinBanded r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.block[i][j] = x.block[i][j] + y.block[i][j];
        return r;
    }
    friend SpinBanded operator-(const SpinBanded& x, const SpinBanded& y) {
        SpinBanded r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.block[i][j] = x.block[i][j] - y.block[i][j];
        return r;
    }
};

}  // namespace su11
