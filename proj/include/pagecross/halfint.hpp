#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace pagecross {

// Exact half-integer arithmetic. Thurston-Bennequin numbers of tangle arcs
// can be half-integral (odd cusp count); sums over a full intersection
// component are always integral. Stored as twice the value.
class HalfInt {
  public:
    constexpr HalfInt() = default;
    static constexpr HalfInt whole(std::int64_t n) { return HalfInt(2 * n); }
    static constexpr HalfInt halves(std::int64_t h) { return HalfInt(h); }

    constexpr std::int64_t numerator_halves() const { return h_; }
    constexpr bool is_integer() const { return h_ % 2 == 0; }
    constexpr std::int64_t to_integer() const { return h_ / 2; } // caller checks is_integer
    constexpr double to_double() const { return static_cast<double>(h_) / 2.0; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.h_ + b.h_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.h_ - b.h_); }
    friend constexpr HalfInt operator-(HalfInt a) { return HalfInt(-a.h_); }
    constexpr HalfInt& operator+=(HalfInt o) { h_ += o.h_; return *this; }
    constexpr HalfInt& operator-=(HalfInt o) { h_ -= o.h_; return *this; }
    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

    std::string str() const {
        if (is_integer()) return std::to_string(to_integer());
        return std::to_string(h_) + "/2";
    }

  private:
    explicit constexpr HalfInt(std::int64_t h) : h_(h) {}
    std::int64_t h_ = 0;
};

} // namespace pagecross
