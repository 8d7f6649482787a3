#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace su11 {

/// Exact rational with 64-bit numerator/denominator, always normalized
/// (gcd 1, positive denominator). Arithmetic goes through 128-bit
/// intermediates and throws std::overflow_error if a result does not fit.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return from_i128(i128(x.num_) * y.den_ + i128(y.num_) * x.den_,
                         i128(x.den_) * y.den_);
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return from_i128(i128(x.num_) * y.den_ - i128(y.num_) * x.den_,
                         i128(x.den_) * y.den_);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return from_i128(i128(x.num_) * y.num_, i128(x.den_) * y.den_);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num_ == 0) throw std::domain_error("Rational: division by zero");
        return from_i128(i128(x.num_) * y.den_, i128(x.den_) * y.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator-=(const Rational& y) { return *this = *this - y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }
    Rational& operator/=(const Rational& y) { return *this = *this / y; }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
    friend bool operator<(const Rational& x, const Rational& y) {
        return i128(x.num_) * y.den_ < i128(y.num_) * x.den_;
    }

    double to_double() const { return double(num_) / double(den_); }

    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    using i128 = __int128;

    static Rational from_i128(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("Rational: 64-bit overflow");
        Rational r;
        r.num_ = std::int64_t(n);
        r.den_ = std::int64_t(d);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }

    void normalize() { *this = from_i128(num_, den_); }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Gaussian rational p + q*i.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(re) {}
    GaussianRational(std::int64_t re) : re_(re) {}
    GaussianRational(Rational re, Rational im) : re_(re), im_(im) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    friend GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
        return {x.re_ + y.re_, x.im_ + y.im_};
    }
    friend GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
        return {x.re_ - y.re_, x.im_ - y.im_};
    }
    friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
        return {x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_};
    }
    friend GaussianRational operator/(const GaussianRational& x, const GaussianRational& y) {
        Rational n = y.re_ * y.re_ + y.im_ * y.im_;
        if (n.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        return {(x.re_ * y.re_ + x.im_ * y.im_) / n, (x.im_ * y.re_ - x.re_ * y.im_) / n};
    }
    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational conj() const { return {re_, -im_}; }

    friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
        return x.re_ == y.re_ && x.im_ == y.im_;
    }
    friend bool operator!=(const GaussianRational& x, const GaussianRational& y) { return !(x == y); }

    std::string to_string() const {
        if (im_.is_zero()) return re_.to_string();
        if (re_.is_zero()) return im_.to_string() + "i";
        return re_.to_string() + (im_ < Rational(0) ? "" : "+") + im_.to_string() + "i";
    }

private:
    Rational re_;
    Rational im_;
};

}  // namespace su11
