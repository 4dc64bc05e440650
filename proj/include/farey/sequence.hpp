#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "farey/fraction.hpp"

namespace farey {

// Ranks are 1-based throughout: rank 1 is 0/1 and rank f_max is 1/1.
using Rank = std::uint32_t;

// Largest order accepted for sequences and tables; keeps f_max below 2^32.
inline constexpr int kMaxOrder = 20000;

/// The Farey sequence F_n: all irreducible fractions in [0, 1] with
/// denominator at most n, ascending. Immutable once built.
class FareySequence {
public:
    explicit FareySequence(int order);

    int order() const noexcept { return order_; }
    Rank f_max() const noexcept { return static_cast<Rank>(terms_.size()); }
    std::span<const Fraction> fractions() const noexcept { return terms_; }

    // Unchecked 1-based access.
    const Fraction& operator[](Rank k) const noexcept { return terms_[k - 1]; }

    // Checked 1-based access; throws RankOutOfRange.
    const Fraction& at_rank(Rank k) const;

private:
    int order_;
    std::vector<Fraction> terms_;
};

// Builds F_n with the next-term recurrence: for consecutive a/b, c/d the
// following term is (k*c - a)/(k*d - b) with k = (n + b) / d.
FareySequence generate_sequence(int order);

Fraction fraction_at_rank(const FareySequence& seq, Rank k);

// 1 + phi(1) + ... + phi(n), from a totient sieve.
std::uint64_t sequence_size(int order);

}  // namespace farey
