#pragma once

#include <complex>

#include "su11/banded.hpp"
#include "su11/env.hpp"
#include "su11/fiber_label.hpp"
#include "su11/spin_operator.hpp"

namespace su11 {

using Cplx = std::complex<double>;
using NumericBanded = BandedOperator<Cplx>;
using NumericSpinBanded = SpinBanded<Cplx>;

enum class LadderGenerator {
    minus_i_e3,   // diagonal, weight m'
    lowering,     // e1 - i e2, band offset -1
    raising,      // e1 + i e2, band offset +1
};

/// Ladder action of the generator on the matrix-element lattice of `fiber`.
/// Coefficients follow the tempered-series formulas and vanish identically at
/// the boundary of the weight support.
NumericBanded ladder_action(LadderGenerator g, const FiberLabel& fiber);

/// Algebra homomorphism from U(su(1,1)) to banded operators on the fiber,
/// through e1 = (e+ + e-)/2, e2 = (e+ - e-)/(2i), e3 = i (-i e3).
NumericBanded env_to_fiber(const EnvElement& x, const FiberLabel& fiber);

/// Entrywise env_to_fiber of a 2x2 operator.
NumericSpinBanded spin_to_fiber(const SpinOperator& op, const FiberLabel& fiber);

/// Exact principal-series path: tau = i rho - 1/2 with rational rho stays in
/// the coefficient field, so the whole fiber action is exact.
struct ExactPrincipalFiber {
    AlgNumber tau;
    HalfInt eps;
    static ExactPrincipalFiber from_rho(const Rational& rho, HalfInt eps);
};
BandedOperator<AlgNumber> ladder_action_exact(LadderGenerator g, const ExactPrincipalFiber& fiber);
BandedOperator<AlgNumber> env_to_fiber_exact(const EnvElement& x, const ExactPrincipalFiber& fiber);

// --- Closed-form fiber values -------------------------------------------

/// Scalar action of the Casimir: tau(tau+1)/2 = -(rho^2 + 1/4)/2 on principal
/// fibers and l(l+1)/2 on discrete fibers.
Cplx casimir_fiber_scalar(const FiberLabel& fiber);

/// Diagonal value of <D^{1/3}>^2 on spinor component comp (0 or 1) at weight
/// m': |tau|^2/2 + m'(m' +- 1) + 1/8, resp. -l(l+1)/2 + m'(m' +- 1) + 1/8.
double dsq_diag_value(const FiberLabel& fiber, int comp, HalfInt m_prime);

/// Diagonal value of Re D^t on component comp at weight m': (-+ m' + 3t/2)/sqrt2.
double re_diag_value(const Rational& t, int comp, HalfInt m_prime);

/// Diagonal value of (Im D)^2 on component comp at weight m'.
double imd_sq_diag_value(const FiberLabel& fiber, int comp, HalfInt m_prime);

}  // namespace su11
