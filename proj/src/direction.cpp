#include "farey/direction.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "farey/error.hpp"

namespace farey {

DirectionTable::DirectionTable(FareySequence seq, FareyTable table)
    : seq_(std::move(seq)), table_(std::move(table)) {
    if (seq_.order() != table_.order() || seq_.f_max() != table_.f_max())
        throw Error(ErrorCode::InvalidArgument, "sequence and table orders differ");
    two_f_max_ = 2 * table_.f_max();
    d_total_ = 8 * table_.f_max() - 8;
}

DirectionTable DirectionTable::build(int order) {
    FareySequence seq(order);
    FareyTable table = build_table(seq);
    return DirectionTable(std::move(seq), std::move(table));
}

DirectionIndex DirectionTable::reflect(Int dx, Int dy, DirectionIndex q) const noexcept {
    if (dx > 0 && dy >= 0) return q;
    if (dx <= 0 && dy > 0) return 2 * two_f_max_ - 2 - q;
    if (dx < 0 && dy <= 0) return 2 * two_f_max_ - 4 + q;
    return 4 * two_f_max_ - 6 - q;
}

DirectionIndex DirectionTable::index_of(Int dx, Int dy) const {
    if (dx == 0 && dy == 0) throw Error(ErrorCode::ZeroVector, "direction of a zero vector");
    Int a = std::llabs(dx);
    Int b = std::llabs(dy);
    const Int n = order();
    if (a > n || b > n) {
        const Int g = std::gcd(a, b);
        a /= g;
        b /= g;
        if (a > n || b > n)
            throw Error(ErrorCode::OutOfTable, "vector (" + std::to_string(dx) + "," +
                                                   std::to_string(dy) + ") exceeds order " +
                                                   std::to_string(n));
    }
    return reflect(dx, dy, quadrant_index(a, b));
}

DirectionIndex direction_index(const DirectionTable& dt, Int dx, Int dy) {
    return dt.index_of(dx, dy);
}

DirectionIndex cyclic_distance(const DirectionTable& dt, DirectionIndex a, DirectionIndex b) noexcept {
    const DirectionIndex d = a > b ? a - b : b - a;
    return d * 2 > dt.d_total() ? dt.d_total() - d : d;
}

}  // namespace farey
