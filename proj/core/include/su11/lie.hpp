#pragma once

#include <array>

#include "su11/alg_number.hpp"

namespace su11 {

/// AlgNumber-linear combination of the basis e1, e2, e3 of su(1,1),
/// with brackets [e1,e2]=e3, [e2,e3]=-e1, [e3,e1]=-e2.
struct LieElement {
    std::array<AlgNumber, 3> coeff{};

    static LieElement basis(int index);  // index in {1,2,3}

    friend LieElement operator+(const LieElement& x, const LieElement& y);
    friend LieElement operator-(const LieElement& x, const LieElement& y);
    friend LieElement operator*(const AlgNumber& c, const LieElement& x);
    friend bool operator==(const LieElement& x, const LieElement& y) {
        return x.coeff == y.coeff;
    }
    bool is_zero() const;
};

LieElement bracket(const LieElement& x, const LieElement& y);

/// 3x3 matrix of ad(x) in the basis (e1,e2,e3); column j holds [x, e_{j+1}].
std::array<std::array<AlgNumber, 3>, 3> ad_matrix(const LieElement& x);

/// Killing form B(x,y) = Tr(ad x . ad y).
AlgNumber killing_form(const LieElement& x, const LieElement& y);

/// B-dual basis (e^1, e^2, e^3) = (e1/2, e2/2, -e3/2).
std::array<LieElement, 3> dual_basis();

/// Trace of sum c_ij ad(e_i) ad(e_j) in the adjoint representation; used to
/// evaluate Tr_ad of quadratic enveloping elements such as the Casimir.
AlgNumber trace_ad_quadratic(const std::array<std::array<AlgNumber, 3>, 3>& c);

}  // namespace su11
