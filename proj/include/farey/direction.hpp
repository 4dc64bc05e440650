#pragma once

/**
 * @file direction.hpp
 * @brief Angle-ordered indices for integer displacement vectors.
 *
 * Every reduced vector (dx, dy) != (0, 0) with |dx|, |dy| <= n receives an
 * index in 1..d_total, d_total = 8 f_max - 8, increasing with the angle
 * atan2(dy, dx) over [0, 360). Index 1 is (1, 0).
 *
 * Within the first quadrant a slope b/a <= 1 maps straight to its table rank
 * (1..f_max) and a slope > 1 to 2 f_max - rank(a/b), which puts 45 degrees at
 * f_max and 90 degrees at 2 f_max - 1. The other quadrants are reflections:
 *
 *   dx >  0, dy >= 0 :  q(dx, dy)
 *   dx <= 0, dy >  0 :  4 f_max - 2 - q(-dx, dy)
 *   dx <  0, dy <= 0 :  4 f_max - 4 + q(-dx, -dy)
 *   dx >= 0, dy <  0 :  8 f_max - 6 - q(dx, -dy)
 *
 * so v and -v always differ by d_total / 2 and a quarter turn adds
 * d_total / 4. Lookups for in-range components read the table directly
 * (aliases included) and use no multiplication.
 */

#include <cstdint>

#include "farey/sequence.hpp"
#include "farey/table.hpp"

namespace farey {

using DirectionIndex = std::uint32_t;

class DirectionTable {
public:
    DirectionTable(FareySequence seq, FareyTable table);

    // Generates the sequence and table of the given order.
    static DirectionTable build(int order);

    int order() const noexcept { return table_.order(); }
    Rank f_max() const noexcept { return table_.f_max(); }
    std::uint32_t d_total() const noexcept { return d_total_; }

    const FareySequence& sequence() const noexcept { return seq_; }
    const FareyTable& table() const noexcept { return table_; }

    // Throws ZeroVector for (0, 0) and OutOfTable when a reduced component
    // exceeds the order.
    DirectionIndex index_of(Int dx, Int dy) const;

    // First-quadrant index for a, b >= 0 (not both zero) within the table:
    // 1..2 f_max - 1.
    DirectionIndex quadrant_index(Int a, Int b) const noexcept {
        return b <= a ? table_.cell(b, a) : two_f_max_ - table_.cell(a, b);
    }

    // Applies the quadrant reflections to an index of (|dx|, |dy|).
    DirectionIndex reflect(Int dx, Int dy, DirectionIndex first_quadrant) const noexcept;

private:
    FareySequence seq_;
    FareyTable table_;
    std::uint32_t two_f_max_;
    std::uint32_t d_total_;
};

DirectionIndex direction_index(const DirectionTable& dt, Int dx, Int dy);

// min(|a - b|, d_total - |a - b|)
DirectionIndex cyclic_distance(const DirectionTable& dt, DirectionIndex a, DirectionIndex b) noexcept;

}  // namespace farey
