#include "su11/lie.hpp"

#include <stdexcept>

namespace su11 {

namespace {

// bracket_table[i][j] = coefficients of [e_{i+1}, e_{j+1}] in the basis.
// [e1,e2]=e3, [e2,e3]=-e1, [e3,e1]=-e2.
constexpr int bracket_sign[3][3] = {{0, 1, 1}, {-1, 0, -1}, {-1, 1, 0}};
constexpr int bracket_target[3][3] = {{-1, 2, 1}, {2, -1, 0}, {1, 0, -1}};

}  // namespace

LieElement LieElement::basis(int index) {
    if (index < 1 || index > 3) throw std::domain_error("LieElement: basis index");
    LieElement e;
    e.coeff[index - 1] = AlgNumber(1);
    return e;
}

bool LieElement::is_zero() const {
    return coeff[0].is_zero() && coeff[1].is_zero() && coeff[2].is_zero();
}

LieElement operator+(const LieElement& x, const LieElement& y) {
    LieElement r;
    for (int i = 0; i < 3; ++i) r.coeff[i] = x.coeff[i] + y.coeff[i];
    return r;
}

LieElement operator-(const LieElement& x, const LieElement& y) {
    LieElement r;
    for (int i = 0; i < 3; ++i) r.coeff[i] = x.coeff[i] - y.coeff[i];
    return r;
}

LieElement operator*(const AlgNumber& c, const LieElement& x) {
    LieElement r;
    for (int i = 0; i < 3; ++i) r.coeff[i] = c * x.coeff[i];
    return r;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
    LieElement r;
    for (int i = 0; i < 3; ++i) {
        if (x.coeff[i].is_zero()) continue;
        for (int j = 0; j < 3; ++j) {
            if (i == j || y.coeff[j].is_zero()) continue;
            int t = bracket_target[i][j];
            AlgNumber s(bracket_sign[i][j]);
            r.coeff[t] += s * x.coeff[i] * y.coeff[j];
        }
    }
    return r;
}

std::array<std::array<AlgNumber, 3>, 3> ad_matrix(const LieElement& x) {
    std::array<std::array<AlgNumber, 3>, 3> m{};
    for (int j = 0; j < 3; ++j) {
        LieElement col = bracket(x, LieElement::basis(j + 1));
        for (int i = 0; i < 3; ++i) m[i][j] = col.coeff[i];
    }
    return m;
}

AlgNumber killing_form(const LieElement& x, const LieElement& y) {
    auto a = ad_matrix(x);
    auto b = ad_matrix(y);
    AlgNumber tr;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) tr += a[i][k] * b[k][i];
    return tr;
}

std::array<LieElement, 3> dual_basis() {
    // Solve B(e^a, e_b) = delta^a_b on the orthogonal basis directly.
    std::array<LieElement, 3> d;
    for (int a = 0; a < 3; ++a) {
        LieElement e = LieElement::basis(a + 1);
        AlgNumber n = killing_form(e, e);
        d[a] = n.inverse() * e;
    }
    return d;
}

AlgNumber trace_ad_quadratic(const std::array<std::array<AlgNumber, 3>, 3>& c) {
    AlgNumber tr;
    std::array<std::array<std::array<AlgNumber, 3>, 3>, 3> ad;
    for (int i = 0; i < 3; ++i) ad[i] = ad_matrix(LieElement::basis(i + 1));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (c[i][j].is_zero()) continue;
            AlgNumber t;
            for (int r = 0; r < 3; ++r)
                for (int s = 0; s < 3; ++s) t += ad[i][r][s] * ad[j][s][r];
            tr += c[i][j] * t;
        }
    return tr;
}

}  // namespace su11
