#pragma once

#include <optional>
#include <string>
#include <variant>

#include "su11/half_int.hpp"

namespace su11 {

/// Principal unitary series label chi = (i rho - 1/2, eps), rho real,
/// eps in {0, 1/2}. Weights m' = m + eps run over all integers m.
struct PrincipalSeries {
    double rho = 0.0;
    HalfInt eps;  // 0 or 1/2
};

/// Discrete series label T_l^(sign), l in (1/2)Z, l <= -1/2; eps is 1/2 when
/// 2l is odd and 0 when 2l is even. The weight support is m' <= l for the
/// negative series and m' >= -l for the positive series; the ladder
/// coefficients vanish exactly at the boundary weight, which together with
/// the scalar action of the Casimir pins the closed (<=) convention.
struct DiscreteSeries {
    int sign = +1;  // +1 or -1
    HalfInt l;      // l <= -1/2
};

class FiberLabel {
public:
    static FiberLabel principal(double rho, HalfInt eps);
    static FiberLabel discrete(int sign, HalfInt l);

    bool is_principal() const { return std::holds_alternative<PrincipalSeries>(v_); }
    const PrincipalSeries& as_principal() const { return std::get<PrincipalSeries>(v_); }
    const DiscreteSeries& as_discrete() const { return std::get<DiscreteSeries>(v_); }

    /// eps for either family: the fractional offset of the weight lattice.
    HalfInt eps() const;

    /// Is the weight m' = m + eps (m integer) inside the fiber's support?
    bool in_support(HalfInt m_prime) const;
    /// Weight corresponding to integer index m.
    HalfInt weight(std::int64_t m) const { return HalfInt::from_twice(2 * m) + eps(); }

    std::string to_string() const;

private:
    std::variant<PrincipalSeries, DiscreteSeries> v_;
};

}  // namespace su11
