#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "farey/search.hpp"

namespace farey {

struct IterationStats {
    Algorithm algorithm = Algorithm::binary;
    std::uint64_t trials = 0;
    std::uint64_t total_iterations = 0;
    std::uint32_t min_iterations = 0;
    std::uint32_t max_iterations = 0;
    std::uint64_t agreement = 0;  // trials matching the brute-force answer

    friend bool operator==(const IterationStats&, const IterationStats&) = default;
};

struct OrderStats {
    int order = 0;
    IterationStats binary;
    IterationStats regula;

    friend bool operator==(const OrderStats&, const OrderStats&) = default;
};

// The key drawn for one trial: q uniform in [n + 1, 100 n], p uniform in
// [0, q]. Each (seed, order, trial) triple seeds its own generator, so the
// draw does not depend on how trials are scheduled.
SearchKey bench_key(std::uint64_t seed, int order, std::uint64_t trial);

// Runs both searches and the brute-force oracle on `trials` keys per order.
// Trials are spread over OpenMP threads; results are identical to the serial
// version for any thread count. Throws InvalidArgument on an empty order list
// or zero trials.
std::vector<OrderStats> bench_iterations(const std::vector<int>& orders, std::uint32_t trials,
                                         std::uint64_t seed);

// Single-threaded reference.
std::vector<OrderStats> bench_iterations_serial(const std::vector<int>& orders,
                                                std::uint32_t trials, std::uint64_t seed);

// Mean rendered as an exact decimal with four digits.
std::string mean_iterations(const IterationStats& stats);

// "order,algo,trials,mean_iters,min_iters,max_iters,agreement" plus one row
// per (order, algorithm), preceded by a '#' line describing the key draw.
std::string bench_csv(const std::vector<OrderStats>& stats, std::uint64_t seed);

}  // namespace farey
