#include "su11/env.hpp"

#include <sstream>
#include <stdexcept>

namespace su11 {

namespace {

// [e_j, e_i] as (sign, generator) for j != i; generator 0 encodes zero.
void bracket_pair(int j, int i, int& sign, int& gen) {
    // [e1,e2]=e3, [e2,e3]=-e1, [e3,e1]=-e2
    if (j == 1 && i == 2) { sign = 1; gen = 3; return; }
    if (j == 2 && i == 1) { sign = -1; gen = 3; return; }
    if (j == 2 && i == 3) { sign = -1; gen = 1; return; }
    if (j == 3 && i == 2) { sign = 1; gen = 1; return; }
    if (j == 3 && i == 1) { sign = -1; gen = 2; return; }
    if (j == 1 && i == 3) { sign = 1; gen = 2; return; }
    sign = 0; gen = 0;
}

}  // namespace

EnvElement::EnvElement(const AlgNumber& scalar) {
    if (!scalar.is_zero()) terms_[EnvMonomial{}] = scalar;
}

EnvElement EnvElement::generator(int index) {
    EnvMonomial m;
    if (index == 1) m.a = 1;
    else if (index == 2) m.b = 1;
    else if (index == 3) m.c = 1;
    else throw std::domain_error("EnvElement: generator index");
    return monomial(m, AlgNumber(1));
}

EnvElement EnvElement::monomial(const EnvMonomial& m, const AlgNumber& c) {
    EnvElement e;
    if (!c.is_zero()) e.terms_[m] = c;
    return e;
}

EnvElement EnvElement::from_lie(const LieElement& x) {
    EnvElement e;
    for (int i = 0; i < 3; ++i)
        if (!x.coeff[i].is_zero()) e += x.coeff[i] * generator(i + 1);
    return e;
}

bool EnvElement::is_scalar() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == EnvMonomial{});
}

AlgNumber EnvElement::scalar_part() const {
    auto it = terms_.find(EnvMonomial{});
    return it == terms_.end() ? AlgNumber() : it->second;
}

int EnvElement::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

void EnvElement::add_term(const EnvMonomial& m, const AlgNumber& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

EnvElement operator+(const EnvElement& x, const EnvElement& y) {
    EnvElement r = x;
    for (const auto& [m, c] : y.terms_) r.add_term(m, c);
    return r;
}

EnvElement operator-(const EnvElement& x, const EnvElement& y) {
    EnvElement r = x;
    for (const auto& [m, c] : y.terms_) r.add_term(m, -c);
    return r;
}

EnvElement EnvElement::operator-() const {
    EnvElement r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

EnvElement operator*(const AlgNumber& c, const EnvElement& x) {
    EnvElement r;
    if (c.is_zero()) return r;
    for (const auto& [m, k] : x.terms_) r.terms_[m] = c * k;
    return r;
}

EnvElement normal_form_word(const std::vector<int>& word, const AlgNumber& c) {
    // Find the leftmost descent and rewrite; straightening terminates since a
    // swap lowers the inversion count and the bracket term lowers the length.
    for (size_t i = 0; i + 1 < word.size(); ++i) {
        if (word[i] > word[i + 1]) {
            std::vector<int> swapped = word;
            std::swap(swapped[i], swapped[i + 1]);
            EnvElement r = normal_form_word(swapped, c);
            int sign, gen;
            bracket_pair(word[i], word[i + 1], sign, gen);
            if (gen != 0) {
                std::vector<int> shorter;
                shorter.reserve(word.size() - 1);
                shorter.insert(shorter.end(), word.begin(), word.begin() + i);
                shorter.push_back(gen);
                shorter.insert(shorter.end(), word.begin() + i + 2, word.end());
                r = r + normal_form_word(shorter, AlgNumber(sign) * c);
            }
            return r;
        }
    }
    EnvMonomial m;
    for (int g : word) {
        if (g == 1) ++m.a;
        else if (g == 2) ++m.b;
        else ++m.c;
    }
    return EnvElement::monomial(m, c);
}

EnvElement operator*(const EnvElement& x, const EnvElement& y) {
    EnvElement r;
    for (const auto& [mx, cx] : x.terms_) {
        for (const auto& [my, cy] : y.terms_) {
            // Concatenated word e1^ax e2^bx e3^cx e1^ay e2^by e3^cy.
            std::vector<int> word;
            word.reserve(mx.degree() + my.degree());
            auto push = [&word](int gen, int count) {
                for (int i = 0; i < count; ++i) word.push_back(gen);
            };
            push(1, mx.a); push(2, mx.b); push(3, mx.c);
            push(1, my.a); push(2, my.b); push(3, my.c);
            r = r + normal_form_word(word, cx * cy);
        }
    }
    return r;
}

EnvElement EnvElement::adjoint() const {
    EnvElement r;
    for (const auto& [m, c] : terms_) {
        std::vector<int> word;
        for (int i = 0; i < m.c; ++i) word.push_back(3);
        for (int i = 0; i < m.b; ++i) word.push_back(2);
        for (int i = 0; i < m.a; ++i) word.push_back(1);
        AlgNumber coeff = c.conj();
        if (m.degree() % 2 == 1) coeff = -coeff;
        r = r + normal_form_word(word, coeff);
    }
    return r;
}

EnvElement commutator(const EnvElement& x, const EnvElement& y) {
    return x * y - y * x;
}

EnvElement anticommutator(const EnvElement& x, const EnvElement& y) {
    return x * y + y * x;
}

EnvElement casimir() {
    auto dual = dual_basis();
    EnvElement omega;
    for (int a = 0; a < 3; ++a)
        omega += EnvElement::generator(a + 1) * EnvElement::from_lie(dual[a]);
    return omega;
}

AlgNumber trace_in_adjoint(const EnvElement& x) {
    std::array<std::array<AlgNumber, 3>, 3> quad{};
    for (const auto& [m, c] : x.terms()) {
        int d = m.degree();
        if (d == 0 || d == 1) continue;  // traceless: ad is 3x3, Tr ad = 0
        if (d > 2) throw std::domain_error("trace_in_adjoint: degree > 2");
        if (m.a == 2) quad[0][0] += c;
        else if (m.b == 2) quad[1][1] += c;
        else if (m.c == 2) quad[2][2] += c;
        else if (m.a == 1 && m.b == 1) quad[0][1] += c;
        else if (m.a == 1 && m.c == 1) quad[0][2] += c;
        else quad[1][2] += c;
    }
    AlgNumber tr = trace_ad_quadratic(quad);
    // Degree-0 part contributes scalar * dim(g).
    return tr + AlgNumber(3) * [&] {
        auto it = x.terms().find(EnvMonomial{});
        return it == x.terms().end() ? AlgNumber() : it->second;
    }();
}

std::string EnvElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (m.a) os << "*e1^" << m.a;
        if (m.b) os << "*e2^" << m.b;
        if (m.c) os << "*e3^" << m.c;
    }
    return os.str();
}

}  // namespace su11
