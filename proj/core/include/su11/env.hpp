#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "su11/alg_number.hpp"
#include "su11/lie.hpp"

namespace su11 {

/// Ordered monomial e1^a e2^b e3^c.
struct EnvMonomial {
    int a = 0, b = 0, c = 0;
    int degree() const { return a + b + c; }
    friend auto operator<=>(const EnvMonomial&, const EnvMonomial&) = default;
};

/// Element of U(su(1,1)) in PBW normal form with variable order e1 < e2 < e3.
/// Products are renormalized through the bracket relations, rewriting
/// e_j e_i -> e_i e_j - [e_j, e_i] for j > i.
class EnvElement {
public:
    EnvElement() = default;
    explicit EnvElement(const AlgNumber& scalar);

    static EnvElement generator(int index);  // e1, e2 or e3
    static EnvElement monomial(const EnvMonomial& m, const AlgNumber& c);
    static EnvElement from_lie(const LieElement& x);

    const std::map<EnvMonomial, AlgNumber>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const;
    AlgNumber scalar_part() const;
    int degree() const;

    friend EnvElement operator+(const EnvElement& x, const EnvElement& y);
    friend EnvElement operator-(const EnvElement& x, const EnvElement& y);
    friend EnvElement operator*(const EnvElement& x, const EnvElement& y);
    friend EnvElement operator*(const AlgNumber& c, const EnvElement& x);
    EnvElement operator-() const;
    EnvElement& operator+=(const EnvElement& y) { return *this = *this + y; }
    EnvElement& operator-=(const EnvElement& y) { return *this = *this - y; }

    friend bool operator==(const EnvElement& x, const EnvElement& y) {
        return x.terms_ == y.terms_;
    }

    /// Formal adjoint on the enveloping factor: reverses products, sends each
    /// generator e_i to -e_i, and conjugates scalar coefficients.
    EnvElement adjoint() const;

    std::string to_string() const;

    void add_term(const EnvMonomial& m, const AlgNumber& c);

private:
    std::map<EnvMonomial, AlgNumber> terms_;
};

EnvElement commutator(const EnvElement& x, const EnvElement& y);
EnvElement anticommutator(const EnvElement& x, const EnvElement& y);

/// Normal form of an arbitrary word in the generators (indices in {1,2,3}).
EnvElement normal_form_word(const std::vector<int>& word, const AlgNumber& c);

/// Casimir element e1 e^1 + e2 e^2 + e3 e^3 = (e1^2 + e2^2 - e3^2)/2.
EnvElement casimir();

/// Trace of a degree-<=2 enveloping element in the adjoint representation.
AlgNumber trace_in_adjoint(const EnvElement& x);

}  // namespace su11
