#pragma once

#include <array>
#include <string>
#include <utility>

#include "su11/env.hpp"
#include "su11/env_clifford.hpp"

namespace su11 {

/// 2x2 matrix over U(su(1,1)): the concrete realization of U (x) Cl acting on
/// spinor-valued functions through the Pauli representation
/// c(e1) = sqrt2 s1, c(e2) = sqrt2 s2, c(e3) = sqrt2 i s3. The representation
/// is not faithful on all of Cl (the volume element acts as a scalar); the
/// operator identities below are asserted in this representation.
class SpinOperator {
public:
    SpinOperator() = default;

    static SpinOperator identity();
    static SpinOperator scalar(const AlgNumber& c);
    /// u (x) M for a constant 2x2 AlgNumber matrix M.
    static SpinOperator tensor(const EnvElement& u,
                               const std::array<std::array<AlgNumber, 2>, 2>& m);

    const EnvElement& entry(int i, int j) const { return e_[i][j]; }
    EnvElement& entry(int i, int j) { return e_[i][j]; }

    bool is_zero() const;
    int degree() const;

    friend SpinOperator operator+(const SpinOperator& x, const SpinOperator& y);
    friend SpinOperator operator-(const SpinOperator& x, const SpinOperator& y);
    friend SpinOperator operator*(const SpinOperator& x, const SpinOperator& y);
    friend SpinOperator operator*(const AlgNumber& c, const SpinOperator& x);
    SpinOperator operator-() const;
    friend bool operator==(const SpinOperator& x, const SpinOperator& y);

    /// Formal adjoint: conjugate-transpose combined with the enveloping-factor
    /// adjoint e_i -> -e_i; anti-multiplicative involution.
    SpinOperator adjoint() const;

    std::string to_string() const;

private:
    std::array<std::array<EnvElement, 2>, 2> e_{};
};

SpinOperator commutator(const SpinOperator& x, const SpinOperator& y);
SpinOperator anticommutator(const SpinOperator& x, const SpinOperator& y);

/// Image of a Clifford algebra element under the Pauli representation
/// (constant entries).
SpinOperator clifford_to_spin(const CliffElement& c);

/// Image of an element of U (x) Cl in the representation.
SpinOperator to_spin(const EnvCliffElement& x);

/// The Dirac family D^t = sum_a e^a (x) c(e_a) + 3t (x) c(q(phi)).
/// t = 1/3 gives the cubic Dirac operator; t = 0 the torsion-free endpoint.
SpinOperator cubic_dirac(const Rational& t);

SpinOperator formal_adjoint(const SpinOperator& op);

/// <D^t>^2 = (D (D)* + (D)* D) / 2.
SpinOperator langle_squared(const Rational& t);

/// R_{D^t} = (i/2) (D^2 - ((D)*)^2); vanishes identically at t = 1/3.
SpinOperator r_operator(const Rational& t);

/// (Re D, Im D) = ((D + D*)/2, -(i/2)(D - D*)).
std::pair<SpinOperator, SpinOperator> real_imag_parts(const Rational& t);

/// (D^t)^2 - (Omega + Tr_ad(Omega)/24) (x) I; zero exactly at t = 1/3.
SpinOperator dirac_square_identity(const Rational& t);

}  // namespace su11
