#include "su11/fiber_map.hpp"

#include <cmath>
#include <stdexcept>

namespace su11 {

namespace {

const Cplx kI{0.0, 1.0};

double hd(HalfInt h) { return h.to_double(); }

// Square-root ladder coefficients of the discrete series. The radicands are
// integers on the weight support and vanish exactly at the boundary.
double neg_lower_radicand(HalfInt l, HalfInt m) { return (hd(l) - hd(m) + 1) * (-hd(l) - hd(m)); }
double neg_raise_radicand(HalfInt l, HalfInt m) { return (hd(l) - hd(m)) * (-hd(l) - hd(m) - 1); }
double pos_lower_radicand(HalfInt l, HalfInt m) { return (hd(l) + hd(m)) * (-hd(l) + hd(m) - 1); }
double pos_raise_radicand(HalfInt l, HalfInt m) { return (hd(l) + hd(m) + 1) * (-hd(l) + hd(m)); }

}  // namespace

NumericBanded ladder_action(LadderGenerator g, const FiberLabel& fiber) {
    auto mask = [fiber](int offset, auto f) {
        return [fiber, offset, f](HalfInt m) -> Cplx {
            if (!fiber.in_support(m) || !fiber.in_support(m + HalfInt(offset))) return {};
            return f(m);
        };
    };

    if (g == LadderGenerator::minus_i_e3)
        return NumericBanded::band(0, mask(0, [](HalfInt m) -> Cplx { return hd(m); }));

    if (fiber.is_principal()) {
        const double rho = fiber.as_principal().rho;
        const Cplx tau = Cplx(-0.5, rho);
        if (g == LadderGenerator::lowering)
            return NumericBanded::band(
                -1, mask(-1, [tau](HalfInt m) { return -(tau - hd(m) + 1.0); }));
        return NumericBanded::band(
            +1, mask(+1, [tau](HalfInt m) { return -(tau + hd(m) + 1.0); }));
    }

    const auto& d = fiber.as_discrete();
    const HalfInt l = d.l;
    if (d.sign < 0) {
        if (g == LadderGenerator::lowering)
            return NumericBanded::band(-1, mask(-1, [l](HalfInt m) -> Cplx {
                return -std::sqrt(neg_lower_radicand(l, m));
            }));
        return NumericBanded::band(+1, mask(+1, [l](HalfInt m) -> Cplx {
            return std::sqrt(neg_raise_radicand(l, m));
        }));
    }
    if (g == LadderGenerator::lowering)
        return NumericBanded::band(-1, mask(-1, [l](HalfInt m) -> Cplx {
            return std::sqrt(pos_lower_radicand(l, m));
        }));
    return NumericBanded::band(+1, mask(+1, [l](HalfInt m) -> Cplx {
        return -std::sqrt(pos_raise_radicand(l, m));
    }));
}

namespace {

// Conversion of an AlgNumber coefficient into the banded scalar type.
Cplx make_coeff(const AlgNumber& a, const Cplx&) { return a.to_complex(); }
AlgNumber make_coeff(const AlgNumber& a, const AlgNumber&) { return a; }

template <class K, class MakeGen>
BandedOperator<K> env_to_fiber_impl(const EnvElement& x, const K& one, MakeGen make) {
    // rho(e1), rho(e2), rho(e3) from the ladder operators.
    BandedOperator<K> r;
    for (const auto& [mono, coeff] : x.terms()) {
        BandedOperator<K> term = BandedOperator<K>::identity(one);
        for (int i = 0; i < mono.a; ++i) term = term * make(1);
        for (int i = 0; i < mono.b; ++i) term = term * make(2);
        for (int i = 0; i < mono.c; ++i) term = term * make(3);
        r = r + make_coeff(coeff, one) * term;
    }
    return r;
}

}  // namespace

NumericBanded env_to_fiber(const EnvElement& x, const FiberLabel& fiber) {
    NumericBanded h = ladder_action(LadderGenerator::minus_i_e3, fiber);
    NumericBanded lo = ladder_action(LadderGenerator::lowering, fiber);
    NumericBanded ra = ladder_action(LadderGenerator::raising, fiber);
    const Cplx half{0.5, 0.0};
    NumericBanded rho1 = half * (ra + lo);
    NumericBanded rho2 = (-kI * half) * (ra - lo);
    NumericBanded rho3 = kI * h;
    auto make = [&](int gen) -> const NumericBanded& {
        return gen == 1 ? rho1 : (gen == 2 ? rho2 : rho3);
    };
    return env_to_fiber_impl(x, Cplx{1.0, 0.0}, make);
}

NumericSpinBanded spin_to_fiber(const SpinOperator& op, const FiberLabel& fiber) {
    NumericSpinBanded r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.block[i][j] = env_to_fiber(op.entry(i, j), fiber);
    return r;
}

ExactPrincipalFiber ExactPrincipalFiber::from_rho(const Rational& rho, HalfInt eps) {
    ExactPrincipalFiber f;
    f.tau = AlgNumber::i() * AlgNumber(rho) - rat(1, 2);
    f.eps = eps;
    return f;
}

BandedOperator<AlgNumber> ladder_action_exact(LadderGenerator g, const ExactPrincipalFiber& fiber) {
    const AlgNumber tau = fiber.tau;
    auto weight = [](HalfInt m) { return AlgNumber(Rational(m.twice(), 2)); };
    switch (g) {
        case LadderGenerator::minus_i_e3:
            return BandedOperator<AlgNumber>::band(0, weight);
        case LadderGenerator::lowering:
            return BandedOperator<AlgNumber>::band(-1, [tau, weight](HalfInt m) {
                return -(tau - weight(m) + AlgNumber(1));
            });
        default:
            return BandedOperator<AlgNumber>::band(+1, [tau, weight](HalfInt m) {
                return -(tau + weight(m) + AlgNumber(1));
            });
    }
}

BandedOperator<AlgNumber> env_to_fiber_exact(const EnvElement& x, const ExactPrincipalFiber& fiber) {
    auto h = ladder_action_exact(LadderGenerator::minus_i_e3, fiber);
    auto lo = ladder_action_exact(LadderGenerator::lowering, fiber);
    auto ra = ladder_action_exact(LadderGenerator::raising, fiber);
    const AlgNumber half_c = rat(1, 2);
    auto rho1 = half_c * (ra + lo);
    auto rho2 = (-AlgNumber::i() * half_c) * (ra - lo);
    auto rho3 = AlgNumber::i() * h;
    auto make = [&](int gen) -> const BandedOperator<AlgNumber>& {
        return gen == 1 ? rho1 : (gen == 2 ? rho2 : rho3);
    };
    return env_to_fiber_impl(x, AlgNumber(1), make);
}

Cplx casimir_fiber_scalar(const FiberLabel& fiber) {
    if (fiber.is_principal()) {
        double rho = fiber.as_principal().rho;
        return {-0.5 * (rho * rho + 0.25), 0.0};
    }
    double l = hd(fiber.as_discrete().l);
    return {0.5 * l * (l + 1), 0.0};
}

double dsq_diag_value(const FiberLabel& fiber, int comp, HalfInt m_prime) {
    double m = hd(m_prime);
    double quad = comp == 0 ? m * (m + 1) : m * (m - 1);
    if (fiber.is_principal()) {
        double rho = fiber.as_principal().rho;
        return 0.5 * (rho * rho + 0.25) + quad + 0.125;
    }
    double l = hd(fiber.as_discrete().l);
    return -0.5 * l * (l + 1) + quad + 0.125;
}

double re_diag_value(const Rational& t, int comp, HalfInt m_prime) {
    double m = hd(m_prime);
    double diag = (comp == 0 ? m : -m) + 1.5 * t.to_double();
    return diag / std::sqrt(2.0);
}

double imd_sq_diag_value(const FiberLabel& fiber, int comp, HalfInt m_prime) {
    // (Im D)^2 extends -(1/2) diag((e1-ie2)(e1+ie2), (e1+ie2)(e1-ie2)).
    double m = hd(m_prime);
    double quad = comp == 0 ? m * (m + 1) : m * (m - 1);
    if (fiber.is_principal()) {
        double rho = fiber.as_principal().rho;
        return 0.5 * (rho * rho + 0.25 + quad);
    }
    double l = hd(fiber.as_discrete().l);
    return 0.5 * (-l * (l + 1) + quad);
}

}  // namespace su11
