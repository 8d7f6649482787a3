#pragma once

#include <vector>

#include "su11/spin_operator.hpp"

namespace su11 {

/// A quadratic subalgebra k of su(1,1) together with the induced orthogonal
/// complement p = k-perp. Construction rejects k on which the Killing form
/// degenerates and k with [k,p] not contained in p.
class SubalgebraSpec {
public:
    explicit SubalgebraSpec(std::vector<LieElement> generators);

    const std::vector<LieElement>& generators() const { return k_; }
    const std::vector<LieElement>& complement() const { return p_; }

private:
    std::vector<LieElement> k_;
    std::vector<LieElement> p_;
};

/// lambda_g(xi) = -(1/4) sum_{a,b} B(xi, [e_a, e_b]) e^a ^ e^b.
ExtElement lambda_g(const LieElement& xi);

/// Split of lambda_g(xi) as lambda_k + lambda_p for xi in k.
struct LambdaSplit {
    ExtElement lambda_k;
    ExtElement lambda_p;
};
LambdaSplit lambda_split(const SubalgebraSpec& k, const LieElement& xi);

struct RelativeDirac {
    EnvCliffElement dirac;             // D_{g,k} = D_g - j(D_k)
    EnvCliffElement p_form;            // sum over p-basis + q(phi_p), for comparison
    EnvCliffElement square_residual;   // D^2 - (Omega_g - j(Omega_k) + const); zero
    SpinOperator dirac_spin;           // image in the representation
};

/// Relative Dirac operator for k = span{e3}, with the square identity
/// verified symbolically in U (x) Cl.
RelativeDirac relative_dirac(const SubalgebraSpec& k);

}  // namespace su11
