#include "farey/sequence.hpp"

#include <string>

#include "farey/error.hpp"

namespace farey {

namespace {

void check_order(int order) {
    if (order < 1) throw Error(ErrorCode::InvalidOrder, "order must be at least 1");
    if (order > kMaxOrder)
        throw Error(ErrorCode::InvalidOrder,
                    "order " + std::to_string(order) + " exceeds " + std::to_string(kMaxOrder));
}

}  // namespace

FareySequence::FareySequence(int order) : order_(order) {
    check_order(order);
    terms_.reserve(sequence_size(order));

    // Neighbour recurrence; constant working state.
    Int a = 0, b = 1, c = 1, d = order;
    terms_.push_back(Fraction::make(0, 1));
    while (c <= order) {
        terms_.push_back(Fraction::make(c, d));
        const Int k = (order + b) / d;
        const Int next_c = k * c - a;
        const Int next_d = k * d - b;
        a = c;
        b = d;
        c = next_c;
        d = next_d;
    }
}

const Fraction& FareySequence::at_rank(Rank k) const {
    if (k < 1 || k > f_max())
        throw Error(ErrorCode::RankOutOfRange,
                    "rank " + std::to_string(k) + " outside 1.." + std::to_string(f_max()));
    return terms_[k - 1];
}

FareySequence generate_sequence(int order) { return FareySequence(order); }

Fraction fraction_at_rank(const FareySequence& seq, Rank k) { return seq.at_rank(k); }

std::uint64_t sequence_size(int order) {
    if (order < 1) throw Error(ErrorCode::InvalidOrder, "order must be at least 1");
    std::vector<std::uint64_t> phi(static_cast<std::size_t>(order) + 1);
    for (std::size_t i = 0; i < phi.size(); ++i) phi[i] = i;
    for (std::size_t p = 2; p < phi.size(); ++p) {
        if (phi[p] != p) continue;  // composite, already touched
        for (std::size_t m = p; m < phi.size(); m += p) phi[m] -= phi[m] / p;
    }
    std::uint64_t total = 1;
    for (std::size_t k = 1; k < phi.size(); ++k) total += phi[k];
    return total;
}

}  // namespace farey
