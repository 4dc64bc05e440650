#pragma once

/**
 * @file fraction.hpp
 * @brief Exact non-negative rationals for Farey arithmetic.
 *
 * Numerators and denominators are 64-bit; every cross product is formed in
 * 128-bit arithmetic, so comparisons never overflow and never touch floating
 * point. Values are always stored in lowest terms, with 0 as 0/1.
 */

#include <compare>
#include <cstdint>
#include <string>

namespace farey {

using Int = std::int64_t;
__extension__ typedef __int128 Wide;

class Fraction {
public:
    constexpr Fraction() = default;

    // Reduces p/q; throws InvalidDenominator for q <= 0 and InvalidArgument
    // for a negative numerator.
    static Fraction make(Int p, Int q);

    constexpr Int num() const noexcept { return num_; }
    constexpr Int den() const noexcept { return den_; }

    constexpr bool is_proper() const noexcept { return num_ <= den_; }

    std::string str() const;

    friend constexpr bool operator==(const Fraction&, const Fraction&) = default;
    friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) noexcept {
        return Wide{a.num_} * b.den_ <=> Wide{b.num_} * a.den_;
    }

private:
    constexpr Fraction(Int p, Int q) noexcept : num_(p), den_(q) {}

    Int num_ = 0;
    Int den_ = 1;

    friend Fraction mediant(Fraction a, Fraction b);
};

Fraction make_fraction(Int p, Int q);

std::strong_ordering compare(Fraction a, Fraction b) noexcept;

// (a.num + b.num) / (a.den + b.den), reduced. Throws Overflow if the sums do
// not fit in 64 bits.
Fraction mediant(Fraction a, Fraction b);

// Decimal rendering rounded half-up at the given number of digits, computed
// with integer arithmetic only ("90.68").
std::string to_decimal(Fraction f, int digits);

}  // namespace farey
