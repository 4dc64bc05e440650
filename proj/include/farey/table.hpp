#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "farey/sequence.hpp"

namespace farey {

inline constexpr Rank kInvalidRank = 0;

/// Dense rank table T_n. Row i is a numerator 0..n, column j a denominator
/// 1..n, and cell (i, j) holds the rank of i/j in F_n for i <= j, including
/// every reducible alias (T(2,4) == T(1,2)). Cells with i > j hold 0.
///
/// Storage is row-major over the full (n + 1) x n rectangle so that a valid
/// lookup is one unconditional read.
class FareyTable {
public:
    // Adopts an already computed grid (used by the cache loader). Checks the
    // grid size against the order; contents are trusted.
    FareyTable(int order, Rank f_max, std::vector<Rank> cells);

    int order() const noexcept { return order_; }
    Rank f_max() const noexcept { return f_max_; }
    std::span<const Rank> cells() const noexcept { return cells_; }

    // Raw read without validation; i in 0..n, j in 1..n.
    Rank cell(Int i, Int j) const noexcept {
        return cells_[static_cast<std::size_t>(i) * static_cast<std::size_t>(order_) +
                      static_cast<std::size_t>(j - 1)];
    }

    // Checked lookup; throws OutOfTable unless 0 <= p <= q <= order, q >= 1.
    Rank rank_of(Int p, Int q) const;

    friend bool operator==(const FareyTable&, const FareyTable&) = default;

private:
    int order_;
    Rank f_max_;
    std::vector<Rank> cells_;
};

// GenFT: writes rank k into (l*i, l*j) for every fraction i/j of rank k and
// every multiplier l with l*j <= n. O(n^2), each valid cell written once.
FareyTable build_table(const FareySequence& seq);

Rank rank_of(const FareyTable& table, Int p, Int q);

/// Outcome of checking the four structural properties of a rank table over
/// every valid cell.
struct PropertyReport {
    bool rank_sum = true;           // T(i,j) + T(j-i,j) == f_max + 1
    bool rows_decreasing = true;    // strictly decreasing along a row, row 0 constant 1
    bool columns_increasing = true; // strictly increasing down a column
    bool column_symmetry = true;    // consecutive differences palindromic per column
    std::uint64_t cells_checked = 0;
    std::vector<std::string> violations;  // first few, for diagnostics

    bool ok() const noexcept {
        return rank_sum && rows_decreasing && columns_increasing && column_symmetry;
    }
};

PropertyReport check_table_properties(const FareyTable& table);

}  // namespace farey
