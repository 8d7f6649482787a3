#pragma once

#include <cstdint>
#include <string>

namespace su11 {

/// Half-integer stored as its double (2x) to keep weight arithmetic exact.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr explicit HalfInt(int whole) : twice_(2 * whole) {}
    static constexpr HalfInt from_twice(std::int64_t t) {
        HalfInt h;
        h.twice_ = t;
        return h;
    }

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    double to_double() const { return 0.5 * double(twice_); }

    friend constexpr HalfInt operator+(HalfInt x, HalfInt y) { return from_twice(x.twice_ + y.twice_); }
    friend constexpr HalfInt operator-(HalfInt x, HalfInt y) { return from_twice(x.twice_ - y.twice_); }
    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    friend constexpr auto operator<=>(HalfInt x, HalfInt y) = default;

    std::string to_string() const {
        if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

private:
    std::int64_t twice_ = 0;
};

constexpr HalfInt half() { return HalfInt::from_twice(1); }

}  // namespace su11
