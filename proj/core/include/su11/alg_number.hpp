#pragma once

#include <complex>
#include <string>

#include "su11/rational.hpp"

namespace su11 {

/// Element of the field Q(i, sqrt2), stored as a + b*sqrt2 with Gaussian
/// rational parts. This ring closes every scalar coefficient the engine
/// produces (1/2, 1/8, 1/sqrt2, i, ...), so equality checks stay exact.
class AlgNumber {
public:
    AlgNumber() = default;
    AlgNumber(std::int64_t n) : a_(Rational(n)) {}
    AlgNumber(Rational r) : a_(GaussianRational(r)) {}
    AlgNumber(GaussianRational a) : a_(a) {}
    AlgNumber(GaussianRational a, GaussianRational b) : a_(a), b_(b) {}

    static AlgNumber i() { return AlgNumber(GaussianRational::i()); }
    static AlgNumber sqrt2() { return AlgNumber(GaussianRational(0), GaussianRational(1)); }
    static AlgNumber inv_sqrt2() {
        return AlgNumber(GaussianRational(0), GaussianRational(Rational(1, 2)));
    }

    const GaussianRational& rational_part() const { return a_; }
    const GaussianRational& root2_part() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    friend AlgNumber operator+(const AlgNumber& x, const AlgNumber& y) {
        return {x.a_ + y.a_, x.b_ + y.b_};
    }
    friend AlgNumber operator-(const AlgNumber& x, const AlgNumber& y) {
        return {x.a_ - y.a_, x.b_ - y.b_};
    }
    friend AlgNumber operator*(const AlgNumber& x, const AlgNumber& y) {
        GaussianRational two{Rational(2)};
        return {x.a_ * y.a_ + two * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
    }
    AlgNumber operator-() const { return {-a_, -b_}; }

    /// Multiplicative inverse. The norm (a + b sqrt2)(a - b sqrt2) = a^2 - 2 b^2
    /// vanishes in Q(i) only when a = b = 0, so every nonzero element divides.
    AlgNumber inverse() const {
        GaussianRational two{Rational(2)};
        GaussianRational n = a_ * a_ - two * b_ * b_;
        if (n.is_zero()) throw std::domain_error("AlgNumber: division by zero");
        return {a_ / n, -b_ / n};
    }
    friend AlgNumber operator/(const AlgNumber& x, const AlgNumber& y) {
        return x * y.inverse();
    }
    AlgNumber& operator+=(const AlgNumber& y) { return *this = *this + y; }
    AlgNumber& operator-=(const AlgNumber& y) { return *this = *this - y; }
    AlgNumber& operator*=(const AlgNumber& y) { return *this = *this * y; }

    /// Complex conjugation: i -> -i, sqrt2 fixed.
    AlgNumber conj() const { return {a_.conj(), b_.conj()}; }

    friend bool operator==(const AlgNumber& x, const AlgNumber& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const AlgNumber& x, const AlgNumber& y) { return !(x == y); }

    std::complex<double> to_complex() const;
    std::string to_string() const;

private:
    GaussianRational a_;
    GaussianRational b_;
};

inline AlgNumber rat(std::int64_t n, std::int64_t d) { return AlgNumber(Rational(n, d)); }

}  // namespace su11
