#include "su11/spin_operator.hpp"

#include <sstream>

namespace su11 {

SpinOperator SpinOperator::identity() { return scalar(AlgNumber(1)); }

SpinOperator SpinOperator::scalar(const AlgNumber& c) {
    SpinOperator r;
    r.e_[0][0] = EnvElement(c);
    r.e_[1][1] = EnvElement(c);
    return r;
}

SpinOperator SpinOperator::tensor(const EnvElement& u,
                                  const std::array<std::array<AlgNumber, 2>, 2>& m) {
    SpinOperator r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.e_[i][j] = m[i][j] * u;
    return r;
}

bool SpinOperator::is_zero() const {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!e_[i][j].is_zero()) return false;
    return true;
}

int SpinOperator::degree() const {
    int d = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) d = std::max(d, e_[i][j].degree());
    return d;
}

SpinOperator operator+(const SpinOperator& x, const SpinOperator& y) {
    SpinOperator r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.e_[i][j] = x.e_[i][j] + y.e_[i][j];
    return r;
}

SpinOperator operator-(const SpinOperator& x, const SpinOperator& y) {
    SpinOperator r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.e_[i][j] = x.e_[i][j] - y.e_[i][j];
    return r;
}

SpinOperator operator*(const SpinOperator& x, const SpinOperator& y) {
    SpinOperator r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.e_[i][j] = x.e_[i][0] * y.e_[0][j] + x.e_[i][1] * y.e_[1][j];
    return r;
}

SpinOperator operator*(const AlgNumber& c, const SpinOperator& x) {
    SpinOperator r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.e_[i][j] = c * x.e_[i][j];
    return r;
}

SpinOperator SpinOperator::operator-() const {
    SpinOperator r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.e_[i][j] = -e_[i][j];
    return r;
}

bool operator==(const SpinOperator& x, const SpinOperator& y) {
    return x.e_ == y.e_;
}

SpinOperator SpinOperator::adjoint() const {
    SpinOperator r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.e_[i][j] = e_[j][i].adjoint();
    return r;
}

SpinOperator commutator(const SpinOperator& x, const SpinOperator& y) {
    return x * y - y * x;
}

SpinOperator anticommutator(const SpinOperator& x, const SpinOperator& y) {
    return x * y + y * x;
}

std::string SpinOperator::to_string() const {
    std::ostringstream os;
    os << "[[" << e_[0][0].to_string() << ", " << e_[0][1].to_string() << "],\n ["
       << e_[1][0].to_string() << ", " << e_[1][1].to_string() << "]]";
    return os.str();
}

namespace {

// Pauli matrices over Q(i).
std::array<std::array<AlgNumber, 2>, 2> sigma(int k) {
    AlgNumber z, o(1), i = AlgNumber::i();
    switch (k) {
        case 1: return {{{z, o}, {o, z}}};
        case 2: return {{{z, -i}, {i, z}}};
        default: return {{{o, z}, {z, -o}}};
    }
}

// c(e1) = sqrt2 s1, c(e2) = sqrt2 s2, c(e3) = sqrt2 i s3.
std::array<std::array<AlgNumber, 2>, 2> c_matrix(int k) {
    auto m = sigma(k);
    AlgNumber f = AlgNumber::sqrt2();
    if (k == 3) f = f * AlgNumber::i();
    for (auto& row : m)
        for (auto& v : row) v = f * v;
    return m;
}

}  // namespace

SpinOperator clifford_to_spin(const CliffElement& c) {
    SpinOperator r;
    for (const auto& [mask, coeff] : c.terms()) {
        SpinOperator prod = SpinOperator::scalar(coeff);
        for (int i = 1; i <= 3; ++i)
            if (mask & (1 << (i - 1)))
                prod = prod * SpinOperator::tensor(EnvElement(AlgNumber(1)), c_matrix(i));
        r = r + prod;
    }
    return r;
}

SpinOperator to_spin(const EnvCliffElement& x) {
    SpinOperator r;
    for (const auto& [key, coeff] : x.terms()) {
        CliffElement cl;
        cl.add_term(key.second, AlgNumber(1));
        SpinOperator c = clifford_to_spin(cl);
        EnvElement u = EnvElement::monomial(key.first, coeff);
        SpinOperator term;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) term.entry(i, j) = u * c.entry(i, j);
        r = r + term;
    }
    return r;
}

SpinOperator cubic_dirac(const Rational& t) {
    return to_spin(cubic_dirac_abstract(t));
}

SpinOperator formal_adjoint(const SpinOperator& op) { return op.adjoint(); }

SpinOperator langle_squared(const Rational& t) {
    SpinOperator d = cubic_dirac(t);
    SpinOperator e = d.adjoint();
    return rat(1, 2) * (d * e + e * d);
}

SpinOperator r_operator(const Rational& t) {
    SpinOperator d = cubic_dirac(t);
    SpinOperator e = d.adjoint();
    AlgNumber half_i = rat(1, 2) * AlgNumber::i();
    return half_i * (d * d - e * e);
}

std::pair<SpinOperator, SpinOperator> real_imag_parts(const Rational& t) {
    SpinOperator d = cubic_dirac(t);
    SpinOperator e = d.adjoint();
    SpinOperator re = rat(1, 2) * (d + e);
    SpinOperator im = (-rat(1, 2) * AlgNumber::i()) * (d - e);
    return {re, im};
}

SpinOperator dirac_square_identity(const Rational& t) {
    SpinOperator d = cubic_dirac(t);
    EnvElement omega = casimir();
    AlgNumber shift = rat(1, 24) * trace_in_adjoint(omega);
    EnvElement z = omega + EnvElement(shift);
    SpinOperator omega_op;
    omega_op.entry(0, 0) = z;
    omega_op.entry(1, 1) = z;
    return d * d - omega_op;
}

}  // namespace su11
