#include "farey/fraction.hpp"

#include <numeric>

#include "farey/error.hpp"

namespace farey {

Fraction Fraction::make(Int p, Int q) {
    if (q <= 0) throw Error(ErrorCode::InvalidDenominator, "denominator must be positive");
    if (p < 0) throw Error(ErrorCode::InvalidArgument, "numerator must be non-negative");
    if (p == 0) return Fraction{0, 1};
    const Int g = std::gcd(p, q);
    return Fraction{p / g, q / g};
}

std::string Fraction::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Fraction make_fraction(Int p, Int q) { return Fraction::make(p, q); }

std::strong_ordering compare(Fraction a, Fraction b) noexcept { return a <=> b; }

Fraction mediant(Fraction a, Fraction b) {
    Int p = 0;
    Int q = 0;
    if (__builtin_add_overflow(a.num_, b.num_, &p) || __builtin_add_overflow(a.den_, b.den_, &q))
        throw Error(ErrorCode::Overflow, "mediant of " + a.str() + " and " + b.str());
    return Fraction::make(p, q);
}

std::string to_decimal(Fraction f, int digits) {
    Wide scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    const Wide scaled = (Wide{f.num()} * scale * 2 + f.den()) / (Wide{f.den()} * 2);
    const auto whole = static_cast<long long>(scaled / scale);
    auto frac = static_cast<long long>(scaled % scale);
    std::string out = std::to_string(whole);
    if (digits > 0) {
        std::string tail = std::to_string(frac);
        out += '.';
        out.append(static_cast<std::size_t>(digits) - tail.size(), '0');
        out += tail;
    }
    return out;
}

}  // namespace farey
