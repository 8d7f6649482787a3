#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "su11/alg_number.hpp"
#include "su11/lie.hpp"

namespace su11 {

/// Basis subsets of {e1,e2,e3} are encoded as bitmasks: bit i-1 marks e_i.
using BasisMask = std::uint8_t;

/// Element of the exterior algebra on su(1,1) (8-dimensional module).
class ExtElement {
public:
    ExtElement() = default;
    explicit ExtElement(const AlgNumber& scalar);

    static ExtElement generator(int index);
    static ExtElement from_lie(const LieElement& x);

    const std::map<BasisMask, AlgNumber>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend ExtElement operator+(const ExtElement& x, const ExtElement& y);
    friend ExtElement operator-(const ExtElement& x, const ExtElement& y);
    friend ExtElement operator*(const AlgNumber& c, const ExtElement& x);
    friend bool operator==(const ExtElement& x, const ExtElement& y) {
        return x.terms_ == y.terms_;
    }

    /// Graded-antisymmetric wedge product.
    friend ExtElement wedge(const ExtElement& x, const ExtElement& y);

    /// Restriction: keeps terms whose wedge factors all lie in `mask`.
    ExtElement restrict_to(BasisMask mask) const;

    void add_term(BasisMask m, const AlgNumber& c);
    std::string to_string() const;

private:
    std::map<BasisMask, AlgNumber> terms_;
};

/// Element of Cl(su(1,1)) with relations e_i e_j + e_j e_i = 2 B(e_i, e_j):
/// the basis is orthogonal, so e1^2 = e2^2 = 2 and e3^2 = -2.
class CliffElement {
public:
    CliffElement() = default;
    explicit CliffElement(const AlgNumber& scalar);

    static CliffElement generator(int index);
    static CliffElement from_lie(const LieElement& x);

    const std::map<BasisMask, AlgNumber>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend CliffElement operator+(const CliffElement& x, const CliffElement& y);
    friend CliffElement operator-(const CliffElement& x, const CliffElement& y);
    friend CliffElement operator*(const CliffElement& x, const CliffElement& y);
    friend CliffElement operator*(const AlgNumber& c, const CliffElement& x);
    CliffElement operator-() const;
    friend bool operator==(const CliffElement& x, const CliffElement& y) {
        return x.terms_ == y.terms_;
    }

    /// Formal adjoint: reverses products, fixes e1 and e2, negates e3,
    /// conjugates coefficients.
    CliffElement adjoint() const;

    void add_term(BasisMask m, const AlgNumber& c);
    std::string to_string() const;

private:
    std::map<BasisMask, AlgNumber> terms_;
};

/// Quantization map q(X1 ^ ... ^ Xk) = (1/k!) sum_sigma sgn(sigma)
/// X_{sigma(1)} ... X_{sigma(k)}, a linear bijection between the exterior and
/// Clifford bases. On an orthogonal basis it sends each ordered wedge
/// monomial to the matching ordered Clifford monomial.
CliffElement quantize(const ExtElement& w);

/// Antisymmetrization of the generators in `word` computed directly from the
/// defining formula via Clifford products; test oracle for `quantize`.
CliffElement antisymmetrize_word(const std::vector<int>& word);

/// Structure constant tensor phi = -(1/12) sum B([e_a,e_b],e_c) e^a^e^b^e^c,
/// evaluating to -(1/8) e1^e2^e3.
ExtElement structure_tensor();

}  // namespace su11
