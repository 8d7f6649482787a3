#pragma once

#include <map>
#include <string>

#include "su11/clifford.hpp"
#include "su11/env.hpp"

namespace su11 {

/// Element of U(su(1,1)) (x) Cl(su(1,1)); the algebra the cubic Dirac family
/// lives in before choosing the spinor representation.
class EnvCliffElement {
public:
    EnvCliffElement() = default;
    explicit EnvCliffElement(const AlgNumber& scalar);

    static EnvCliffElement tensor(const EnvElement& u, const CliffElement& c);
    static EnvCliffElement env(const EnvElement& u);
    static EnvCliffElement cliff(const CliffElement& c);

    using Key = std::pair<EnvMonomial, BasisMask>;
    const std::map<Key, AlgNumber>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend EnvCliffElement operator+(const EnvCliffElement& x, const EnvCliffElement& y);
    friend EnvCliffElement operator-(const EnvCliffElement& x, const EnvCliffElement& y);
    friend EnvCliffElement operator*(const EnvCliffElement& x, const EnvCliffElement& y);
    friend EnvCliffElement operator*(const AlgNumber& c, const EnvCliffElement& x);
    EnvCliffElement operator-() const;
    friend bool operator==(const EnvCliffElement& x, const EnvCliffElement& y) {
        return x.terms_ == y.terms_;
    }

    /// (u (x) c)* = u* (x) c* with the factor adjoints of env.hpp/clifford.hpp.
    EnvCliffElement adjoint() const;

    void add_term(const EnvMonomial& m, BasisMask k, const AlgNumber& c);
    std::string to_string() const;

private:
    std::map<Key, AlgNumber> terms_;
};

/// Kostant's one-parameter Dirac family sum_a e^a (x) e_a + 3t (x) q(phi)
/// in the abstract algebra; t = 1/3 is the cubic Dirac operator.
EnvCliffElement cubic_dirac_abstract(const Rational& t);

}  // namespace su11
