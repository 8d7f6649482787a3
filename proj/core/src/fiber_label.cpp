#include "su11/fiber_label.hpp"

#include <stdexcept>

namespace su11 {

FiberLabel FiberLabel::principal(double rho, HalfInt eps) {
    if (eps != HalfInt(0) && eps != half())
        throw std::domain_error("FiberLabel: eps must be 0 or 1/2");
    FiberLabel f;
    f.v_ = PrincipalSeries{rho, eps};
    return f;
}

FiberLabel FiberLabel::discrete(int sign, HalfInt l) {
    if (sign != 1 && sign != -1) throw std::domain_error("FiberLabel: sign");
    if (l.twice() > -1) throw std::domain_error("FiberLabel: l must be <= -1/2");
    FiberLabel f;
    f.v_ = DiscreteSeries{sign, l};
    return f;
}

HalfInt FiberLabel::eps() const {
    if (is_principal()) return as_principal().eps;
    // eps = 1/2 iff 2l is odd.
    return as_discrete().l.is_integer() ? HalfInt(0) : half();
}

bool FiberLabel::in_support(HalfInt m_prime) const {
    if (is_principal()) return true;
    const auto& d = as_discrete();
    if (d.sign < 0) return m_prime <= d.l;
    return m_prime >= -d.l;
}

std::string FiberLabel::to_string() const {
    if (is_principal()) {
        const auto& p = as_principal();
        return "principal(rho=" + std::to_string(p.rho) + ",eps=" + p.eps.to_string() + ")";
    }
    const auto& d = as_discrete();
    return std::string("discrete(") + (d.sign > 0 ? "+" : "-") + ",l=" + d.l.to_string() + ")";
}

}  // namespace su11
