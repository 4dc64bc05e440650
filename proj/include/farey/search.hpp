#pragma once

/**
 * @file search.hpp
 * @brief Closest member of F_n to an arbitrary proper fraction.
 *
 * Three routes share one contract: binary search over the rank bracket,
 * false-position (Regula-Falsi) interpolation over the same bracket, and a
 * linear scan kept as an oracle. All comparisons are 128-bit integer cross
 * products. When the key sits exactly halfway between two members the larger
 * one is returned.
 */

#include <cstdint>
#include <string_view>

#include "farey/sequence.hpp"
#include "farey/table.hpp"

namespace farey {

/// A query p/q with 0 <= p <= q and q >= 1. Not necessarily reduced; q may be
/// far larger than the order.
struct SearchKey {
    Int p = 0;
    Int q = 1;

    // Throws InvalidDenominator for q < 1 and InvalidArgument when the key is
    // negative or improper.
    static SearchKey make(Int p, Int q);
};

struct RankRange {
    Rank f1 = 1;
    Rank f2 = 1;
};

struct Bracket {
    RankRange range;
    Fraction lower;
    Fraction upper;
};

enum class Algorithm { binary, regula_falsi, brute };

std::string_view to_string(Algorithm algo) noexcept;

struct SearchResult {
    Fraction closest;
    Rank rank = 1;
    std::uint32_t iterations = 0;
    Algorithm algorithm = Algorithm::brute;
};

// Sign of (f - key), exact.
std::strong_ordering compare(Fraction f, SearchKey key) noexcept;

// Floor of the rank where the straight line through (f1, lower - key) and
// (f2, upper - key) crosses zero. Requires lower <= key <= upper, lower < upper.
Rank interpolate_rank(Rank f1, Fraction lower, Rank f2, Fraction upper, SearchKey key) noexcept;

// floor(p n / q) / n and ceil(p n / q) / n, reduced, with their ranks.
Bracket bracket_range(const FareySequence& seq, const FareyTable& table, SearchKey key);

// Iterations count midpoint probes.
SearchResult closest_binary(const FareySequence& seq, const FareyTable& table, SearchKey key);

// Iterations count interpolation cycles: each computes the secant zero of
// the signed difference between the bracket ends, probes that rank and its
// neighbour toward the key, and either answers or narrows the bracket.
SearchResult closest_regula_falsi(const FareySequence& seq, const FareyTable& table, SearchKey key);

// Linear scan over every member; iterations is f_max.
SearchResult closest_bruteforce(const FareySequence& seq, SearchKey key);

SearchResult find_closest(const FareySequence& seq, const FareyTable& table, SearchKey key,
                          Algorithm algo);

}  // namespace farey
