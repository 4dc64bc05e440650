#include "farey/table.hpp"

#include <string>

#include "farey/error.hpp"

namespace farey {

FareyTable::FareyTable(int order, Rank f_max, std::vector<Rank> cells)
    : order_(order), f_max_(f_max), cells_(std::move(cells)) {
    if (order < 1 || order > kMaxOrder)
        throw Error(ErrorCode::InvalidOrder, "table order " + std::to_string(order));
    const auto expected = static_cast<std::size_t>(order + 1) * static_cast<std::size_t>(order);
    if (cells_.size() != expected)
        throw Error(ErrorCode::InvalidArgument, "table grid has " + std::to_string(cells_.size()) +
                                                    " cells, expected " + std::to_string(expected));
}

Rank FareyTable::rank_of(Int p, Int q) const {
    if (q < 1 || p < 0 || p > q || q > order_)
        throw Error(ErrorCode::OutOfTable, std::to_string(p) + "/" + std::to_string(q) +
                                               " is not in T_" + std::to_string(order_));
    return cell(p, q);
}

FareyTable build_table(const FareySequence& seq) {
    const int n = seq.order();
    std::vector<Rank> cells(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n),
                            kInvalidRank);
    const auto width = static_cast<std::size_t>(n);
    for (Rank k = 1; k <= seq.f_max(); ++k) {
        const Fraction& f = seq[k];
        for (Int i = f.num(), j = f.den(); j <= n; i += f.num(), j += f.den())
            cells[static_cast<std::size_t>(i) * width + static_cast<std::size_t>(j - 1)] = k;
    }
    return FareyTable(n, seq.f_max(), std::move(cells));
}

Rank rank_of(const FareyTable& table, Int p, Int q) { return table.rank_of(p, q); }

PropertyReport check_table_properties(const FareyTable& table) {
    PropertyReport report;
    const Int n = table.order();
    const Rank f_max = table.f_max();
    auto note = [&report](bool& flag, std::string msg) {
        flag = false;
        if (report.violations.size() < 16) report.violations.push_back(std::move(msg));
    };
    auto at = [](Int i, Int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; };

    for (Int j = 1; j <= n; ++j) {
        for (Int i = 0; i <= j; ++i) {
            ++report.cells_checked;
            const Rank r = table.cell(i, j);
            if (table.cell(i, j) + table.cell(j - i, j) != f_max + 1)
                note(report.rank_sum, "rank sum fails at " + at(i, j));
            if (i < j) {
                if (table.cell(i + 1, j) <= r)
                    note(report.columns_increasing, "column not increasing at " + at(i, j));
                // Both sides are positive by column monotonicity; compare as sums.
                if (table.cell(i + 1, j) + table.cell(j - i - 1, j) !=
                    table.cell(j - i, j) + r)
                    note(report.column_symmetry, "column differences asymmetric at " + at(i, j));
            }
        }
    }
    for (Int i = 0; i <= n; ++i) {
        for (Int j = (i == 0 ? 1 : i); j < n; ++j) {
            const Rank here = table.cell(i, j);
            const Rank next = table.cell(i, j + 1);
            if (i == 0 ? (here != 1 || next != 1) : next >= here)
                note(report.rows_decreasing, "row not decreasing at " + at(i, j));
        }
        if (i == 0 && n == 1 && table.cell(0, 1) != 1)
            note(report.rows_decreasing, "row 0 is not rank 1");
    }
    return report;
}

}  // namespace farey
