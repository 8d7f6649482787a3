#include "su11/alg_number.hpp"

#include <cmath>

namespace su11 {

std::complex<double> AlgNumber::to_complex() const {
    const double s = std::sqrt(2.0);
    return {a_.re().to_double() + s * b_.re().to_double(),
            a_.im().to_double() + s * b_.im().to_double()};
}

std::string AlgNumber::to_string() const {
    if (b_.is_zero()) return a_.to_string();
    std::string s = "(" + b_.to_string() + ")*sqrt2";
    if (a_.is_zero()) return s;
    return "(" + a_.to_string() + ")+" + s;
}

}  // namespace su11
