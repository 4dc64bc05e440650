#include "farey/search.hpp"

#include <algorithm>
#include <numeric>

#include "farey/error.hpp"

namespace farey {

namespace {

// |f - key| scaled by key.q: |f.num * q - p * f.den| / f.den. Comparing
// a_dist / a.den against b_dist / b.den needs one more cross product.
Wide scaled_distance(Fraction f, SearchKey key) noexcept {
    const Wide d = Wide{f.num()} * key.q - Wide{key.p} * f.den();
    return d < 0 ? -d : d;
}

// Which of two members is nearer the key; ties go to the larger fraction.
bool prefer_first(Fraction a, Fraction b, SearchKey key) noexcept {
    const auto ord = scaled_distance(a, key) * b.den() <=> scaled_distance(b, key) * a.den();
    if (ord != 0) return ord < 0;
    return a > b;
}

SearchResult pick(const FareySequence& seq, Rank lo, Rank hi, SearchKey key,
                  std::uint32_t iterations, Algorithm algo) {
    const Rank r = prefer_first(seq[lo], seq[hi], key) ? lo : hi;
    return {seq[r], r, iterations, algo};
}

}  // namespace

Rank interpolate_rank(Rank f1, Fraction lower, Rank f2, Fraction upper, SearchKey key) noexcept {
    // Signed differences times q: y1 = n1 / q1, y2 = n2 / q2 with n1 <= 0 <= n2.
    const Wide n1 = Wide{lower.num()} * key.q - Wide{lower.den()} * key.p;
    const Wide n2 = Wide{upper.num()} * key.q - Wide{upper.den()} * key.p;
    // x = (f1 y2 - f2 y1) / (y2 - y1); scaling both by q1 q2 q clears the
    // denominators. Both terms are non-negative, so division floors.
    const Wide numer = Wide{f1} * n2 * lower.den() - Wide{f2} * n1 * upper.den();
    const Wide denom = n2 * lower.den() - n1 * upper.den();
    if (denom == 0) return f1 + (f2 - f1) / 2;
    return static_cast<Rank>(numer / denom);
}

SearchKey SearchKey::make(Int p, Int q) {
    if (q < 1) throw Error(ErrorCode::InvalidDenominator, "key denominator must be positive");
    if (p < 0 || p > q)
        throw Error(ErrorCode::InvalidArgument,
                    std::to_string(p) + "/" + std::to_string(q) + " is not a proper fraction");
    return {p, q};
}

std::string_view to_string(Algorithm algo) noexcept {
    switch (algo) {
        case Algorithm::binary: return "binary";
        case Algorithm::regula_falsi: return "regula";
        case Algorithm::brute: return "brute";
    }
    return "unknown";
}

std::strong_ordering compare(Fraction f, SearchKey key) noexcept {
    return Wide{f.num()} * key.q <=> Wide{key.p} * f.den();
}

Bracket bracket_range(const FareySequence& seq, const FareyTable& table, SearchKey key) {
    const Int n = table.order();
    const Wide scaled = Wide{key.p} * n;
    const auto lo = static_cast<Int>(scaled / key.q);
    const Int hi = lo + (scaled % key.q != 0 ? 1 : 0);
    Bracket b;
    b.lower = Fraction::make(lo, n);
    b.upper = Fraction::make(hi, n);
    b.range.f1 = table.cell(b.lower.num(), b.lower.den());
    b.range.f2 = table.cell(b.upper.num(), b.upper.den());
    (void)seq;
    return b;
}

SearchResult closest_binary(const FareySequence& seq, const FareyTable& table, SearchKey key) {
    const Bracket b = bracket_range(seq, table, key);
    Rank lo = b.range.f1;
    Rank hi = b.range.f2;
    std::uint32_t iterations = 0;
    if (lo == hi) return {seq[lo], lo, 0, Algorithm::binary};
    // Invariant: seq[lo] <= key <= seq[hi].
    while (hi - lo > 1) {
        const Rank mid = lo + (hi - lo) / 2;
        ++iterations;
        const auto ord = compare(seq[mid], key);
        if (ord == 0) return {seq[mid], mid, iterations, Algorithm::binary};
        (ord < 0 ? lo : hi) = mid;
    }
    return pick(seq, lo, hi, key, iterations, Algorithm::binary);
}

SearchResult closest_regula_falsi(const FareySequence& seq, const FareyTable& table,
                                  SearchKey key) {
    const Bracket b = bracket_range(seq, table, key);
    Rank f1 = b.range.f1;
    Rank f2 = b.range.f2;
    if (f1 == f2) return {seq[f1], f1, 0, Algorithm::regula_falsi};
    if (f2 - f1 == 1) return pick(seq, f1, f2, key, 0, Algorithm::regula_falsi);

    std::uint32_t iterations = 0;
    while (true) {
        ++iterations;
        const Fraction& lower = seq[f1];
        const Fraction& upper = seq[f2];
        // Keep the probe strictly inside so the bracket always shrinks.
        const Rank r = std::clamp(interpolate_rank(f1, lower, f2, upper, key), f1 + 1, f2 - 1);
        const Rank r2 = compare(seq[r], key) < 0 ? r + 1 : r - 1;
        const Rank lo = std::min(r, r2);
        const Rank hi = std::max(r, r2);
        if (compare(seq[lo], key) <= 0 && compare(seq[hi], key) >= 0)
            return pick(seq, lo, hi, key, iterations, Algorithm::regula_falsi);

        const Rank before = f2 - f1;
        if (compare(seq[lo], key) > 0)
            f2 = lo;
        else
            f1 = hi;
        if (f2 - f1 >= before) {
            // Not reachable with a clamped probe; bisect if it ever happens.
            const Rank mid = f1 + (f2 - f1) / 2;
            (compare(seq[mid], key) <= 0 ? f1 : f2) = mid;
        }
        if (f2 - f1 <= 1) return pick(seq, f1, f2, key, iterations, Algorithm::regula_falsi);
    }
}

SearchResult closest_bruteforce(const FareySequence& seq, SearchKey key) {
    Rank best = 1;
    for (Rank k = 2; k <= seq.f_max(); ++k)
        if (prefer_first(seq[k], seq[best], key)) best = k;
    return {seq[best], best, seq.f_max(), Algorithm::brute};
}

SearchResult find_closest(const FareySequence& seq, const FareyTable& table, SearchKey key,
                          Algorithm algo) {
    switch (algo) {
        case Algorithm::binary: return closest_binary(seq, table, key);
        case Algorithm::regula_falsi: return closest_regula_falsi(seq, table, key);
        case Algorithm::brute: return closest_bruteforce(seq, key);
    }
    return closest_bruteforce(seq, key);
}

}  // namespace farey
