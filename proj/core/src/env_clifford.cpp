#include "su11/env_clifford.hpp"

#include <sstream>

namespace su11 {

EnvCliffElement::EnvCliffElement(const AlgNumber& scalar) {
    if (!scalar.is_zero()) terms_[{EnvMonomial{}, 0}] = scalar;
}

EnvCliffElement EnvCliffElement::tensor(const EnvElement& u, const CliffElement& c) {
    EnvCliffElement r;
    for (const auto& [mu, cu] : u.terms())
        for (const auto& [mc, cc] : c.terms()) r.add_term(mu, mc, cu * cc);
    return r;
}

EnvCliffElement EnvCliffElement::env(const EnvElement& u) {
    return tensor(u, CliffElement(AlgNumber(1)));
}

EnvCliffElement EnvCliffElement::cliff(const CliffElement& c) {
    return tensor(EnvElement(AlgNumber(1)), c);
}

void EnvCliffElement::add_term(const EnvMonomial& m, BasisMask k, const AlgNumber& c) {
    if (c.is_zero()) return;
    Key key{m, k};
    auto it = terms_.find(key);
    if (it == terms_.end()) terms_[key] = c;
    else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

EnvCliffElement operator+(const EnvCliffElement& x, const EnvCliffElement& y) {
    EnvCliffElement r = x;
    for (const auto& [k, c] : y.terms_) r.add_term(k.first, k.second, c);
    return r;
}

EnvCliffElement operator-(const EnvCliffElement& x, const EnvCliffElement& y) {
    EnvCliffElement r = x;
    for (const auto& [k, c] : y.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

EnvCliffElement EnvCliffElement::operator-() const {
    EnvCliffElement r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

EnvCliffElement operator*(const AlgNumber& c, const EnvCliffElement& x) {
    EnvCliffElement r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : x.terms_) r.terms_[k] = c * v;
    return r;
}

EnvCliffElement operator*(const EnvCliffElement& x, const EnvCliffElement& y) {
    EnvCliffElement r;
    for (const auto& [kx, cx] : x.terms_) {
        for (const auto& [ky, cy] : y.terms_) {
            EnvElement u = EnvElement::monomial(kx.first, AlgNumber(1)) *
                           EnvElement::monomial(ky.first, AlgNumber(1));
            CliffElement cl;
            cl.add_term(kx.second, AlgNumber(1));
            CliffElement cl2;
            cl2.add_term(ky.second, AlgNumber(1));
            cl = cl * cl2;
            AlgNumber scale = cx * cy;
            for (const auto& [mu, cu] : u.terms())
                for (const auto& [mc, cc] : cl.terms())
                    r.add_term(mu, mc, scale * cu * cc);
        }
    }
    return r;
}

EnvCliffElement EnvCliffElement::adjoint() const {
    EnvCliffElement r;
    for (const auto& [k, c] : terms_) {
        EnvElement u = EnvElement::monomial(k.first, c).adjoint();
        CliffElement cl;
        cl.add_term(k.second, AlgNumber(1));
        cl = cl.adjoint();
        for (const auto& [mu, cu] : u.terms())
            for (const auto& [mc, cc] : cl.terms()) r.add_term(mu, mc, cu * cc);
    }
    return r;
}

std::string EnvCliffElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*["
           << EnvElement::monomial(k.first, AlgNumber(1)).to_string() << " (x) ";
        CliffElement cl;
        cl.add_term(k.second, AlgNumber(1));
        os << cl.to_string() << "]";
    }
    return os.str();
}

EnvCliffElement cubic_dirac_abstract(const Rational& t) {
    auto dual = dual_basis();
    EnvCliffElement d;
    for (int a = 0; a < 3; ++a)
        d = d + EnvCliffElement::tensor(EnvElement::from_lie(dual[a]),
                                        CliffElement::generator(a + 1));
    AlgNumber three_t = AlgNumber(3) * AlgNumber(t);
    d = d + three_t * EnvCliffElement::cliff(quantize(structure_tensor()));
    return d;
}

}  // namespace su11
