#include "su11/clifford.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace su11 {

namespace {

int popcount(BasisMask m) { return __builtin_popcount(m); }

// Sign collected when moving generator `gen` (1-based) from the left across
// the ordered monomial encoded by `mask` into its sorted slot; `square` is
// e_i^2 = B(e_i,e_i) used when the generator is already present.
const AlgNumber kSquare[4] = {AlgNumber(0), AlgNumber(2), AlgNumber(2), AlgNumber(-2)};

std::string mask_to_string(BasisMask m, const char* sep) {
    if (m == 0) return "1";
    std::string s;
    for (int i = 1; i <= 3; ++i) {
        if (m & (1 << (i - 1))) {
            if (!s.empty()) s += sep;
            s += "e" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// ExtElement

ExtElement::ExtElement(const AlgNumber& scalar) {
    if (!scalar.is_zero()) terms_[0] = scalar;
}

ExtElement ExtElement::generator(int index) {
    if (index < 1 || index > 3) throw std::domain_error("ExtElement: generator index");
    ExtElement e;
    e.terms_[BasisMask(1 << (index - 1))] = AlgNumber(1);
    return e;
}

ExtElement ExtElement::from_lie(const LieElement& x) {
    ExtElement e;
    for (int i = 0; i < 3; ++i)
        if (!x.coeff[i].is_zero()) e.add_term(BasisMask(1 << i), x.coeff[i]);
    return e;
}

void ExtElement::add_term(BasisMask m, const AlgNumber& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) terms_[m] = c;
    else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ExtElement operator+(const ExtElement& x, const ExtElement& y) {
    ExtElement r = x;
    for (const auto& [m, c] : y.terms_) r.add_term(m, c);
    return r;
}

ExtElement operator-(const ExtElement& x, const ExtElement& y) {
    ExtElement r = x;
    for (const auto& [m, c] : y.terms_) r.add_term(m, -c);
    return r;
}

ExtElement operator*(const AlgNumber& c, const ExtElement& x) {
    ExtElement r;
    if (c.is_zero()) return r;
    for (const auto& [m, k] : x.terms_) r.terms_[m] = c * k;
    return r;
}

ExtElement wedge(const ExtElement& x, const ExtElement& y) {
    ExtElement r;
    for (const auto& [mx, cx] : x.terms_) {
        for (const auto& [my, cy] : y.terms_) {
            if (mx & my) continue;  // repeated factor
            // Sign: for each bit of my, count bits of mx above it.
            int inversions = 0;
            for (int i = 0; i < 3; ++i)
                if (my & (1 << i))
                    inversions += popcount(BasisMask(mx & ~((1 << (i + 1)) - 1)));
            AlgNumber s(inversions % 2 == 0 ? 1 : -1);
            r.add_term(BasisMask(mx | my), s * cx * cy);
        }
    }
    return r;
}

ExtElement ExtElement::restrict_to(BasisMask mask) const {
    ExtElement r;
    for (const auto& [m, c] : terms_)
        if ((m & ~mask) == 0) r.terms_[m] = c;
    return r;
}

std::string ExtElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*" << mask_to_string(m, "^");
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// CliffElement

CliffElement::CliffElement(const AlgNumber& scalar) {
    if (!scalar.is_zero()) terms_[0] = scalar;
}

CliffElement CliffElement::generator(int index) {
    if (index < 1 || index > 3) throw std::domain_error("CliffElement: generator index");
    CliffElement e;
    e.terms_[BasisMask(1 << (index - 1))] = AlgNumber(1);
    return e;
}

CliffElement CliffElement::from_lie(const LieElement& x) {
    CliffElement e;
    for (int i = 0; i < 3; ++i)
        if (!x.coeff[i].is_zero()) e.add_term(BasisMask(1 << i), x.coeff[i]);
    return e;
}

void CliffElement::add_term(BasisMask m, const AlgNumber& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) terms_[m] = c;
    else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CliffElement operator+(const CliffElement& x, const CliffElement& y) {
    CliffElement r = x;
    for (const auto& [m, c] : y.terms_) r.add_term(m, c);
    return r;
}

CliffElement operator-(const CliffElement& x, const CliffElement& y) {
    CliffElement r = x;
    for (const auto& [m, c] : y.terms_) r.add_term(m, -c);
    return r;
}

CliffElement CliffElement::operator-() const {
    CliffElement r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

CliffElement operator*(const AlgNumber& c, const CliffElement& x) {
    CliffElement r;
    if (c.is_zero()) return r;
    for (const auto& [m, k] : x.terms_) r.terms_[m] = c * k;
    return r;
}

CliffElement operator*(const CliffElement& x, const CliffElement& y) {
    CliffElement r;
    for (const auto& [mx, cx] : x.terms_) {
        for (const auto& [my, cy] : y.terms_) {
            // Merge each generator of e_my, in ascending order, into the
            // ordered monomial accumulated so far: anticommute it past the
            // higher-index generators, then either insert it or square it.
            AlgNumber coeff = cx * cy;
            BasisMask cur = mx;
            for (int i = 1; i <= 3; ++i) {
                if (!(my & (1 << (i - 1)))) continue;
                BasisMask above = BasisMask(cur & ~((1 << i) - 1));
                if (popcount(above) % 2 == 1) coeff = -coeff;
                if (cur & (1 << (i - 1))) {
                    cur = BasisMask(cur & ~(1 << (i - 1)));
                    coeff = coeff * kSquare[i];
                } else {
                    cur = BasisMask(cur | (1 << (i - 1)));
                }
            }
            r.add_term(cur, coeff);
        }
    }
    return r;
}

CliffElement CliffElement::adjoint() const {
    CliffElement r;
    for (const auto& [m, c] : terms_) {
        int k = popcount(m);
        // Reversal of k pairwise-anticommuting generators gives (-1)^(k(k-1)/2);
        // e3* = -e3 adds a sign when e3 is present.
        int sign = ((k * (k - 1) / 2) % 2 == 0) ? 1 : -1;
        if (m & 0b100) sign = -sign;
        r.add_term(m, AlgNumber(sign) * c.conj());
    }
    return r;
}

std::string CliffElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*" << mask_to_string(m, "");
    }
    return os.str();
}

// ---------------------------------------------------------------------------

CliffElement quantize(const ExtElement& w) {
    CliffElement r;
    for (const auto& [m, c] : w.terms()) r.add_term(m, c);
    return r;
}

CliffElement antisymmetrize_word(const std::vector<int>& word) {
    std::vector<int> perm(word.size());
    std::iota(perm.begin(), perm.end(), 0);
    CliffElement sum;
    long count = 0;
    do {
        int inv = 0;
        for (size_t i = 0; i < perm.size(); ++i)
            for (size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inv;
        CliffElement prod{AlgNumber(inv % 2 == 0 ? 1 : -1)};
        for (size_t i = 0; i < perm.size(); ++i)
            prod = prod * CliffElement::generator(word[perm[i]]);
        sum = sum + prod;
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    Rational inv_fact(1, count == 0 ? 1 : count);
    return AlgNumber(inv_fact) * sum;
}

ExtElement structure_tensor() {
    auto dual = dual_basis();
    ExtElement phi;
    AlgNumber c = rat(-1, 12);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int d = 0; d < 3; ++d) {
                LieElement br = bracket(LieElement::basis(a + 1), LieElement::basis(b + 1));
                AlgNumber coef = killing_form(br, LieElement::basis(d + 1));
                if (coef.is_zero()) continue;
                ExtElement w = wedge(wedge(ExtElement::from_lie(dual[a]),
                                           ExtElement::from_lie(dual[b])),
                                     ExtElement::from_lie(dual[d]));
                phi = phi + (c * coef) * w;
            }
    return phi;
}

}  // namespace su11
