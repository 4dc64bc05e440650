#include "farey/bench.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "farey/error.hpp"
#include "farey/fraction.hpp"

namespace farey {

namespace {

struct TrialOutcome {
    std::uint32_t binary_iters;
    std::uint32_t regula_iters;
    bool binary_agrees;
    bool regula_agrees;
};

TrialOutcome run_trial(const FareySequence& seq, const FareyTable& table, std::uint64_t seed,
                       std::uint64_t trial) {
    const SearchKey key = bench_key(seed, seq.order(), trial);
    const SearchResult oracle = closest_bruteforce(seq, key);
    const SearchResult bin = closest_binary(seq, table, key);
    const SearchResult reg = closest_regula_falsi(seq, table, key);
    return {bin.iterations, reg.iterations, bin.rank == oracle.rank, reg.rank == oracle.rank};
}

void start(IterationStats& s, Algorithm algo, std::uint64_t trials) {
    s = {};
    s.algorithm = algo;
    s.trials = trials;
    s.min_iterations = UINT32_MAX;
}

void accumulate(IterationStats& s, std::uint32_t iters, bool agrees) {
    s.total_iterations += iters;
    s.min_iterations = std::min(s.min_iterations, iters);
    s.max_iterations = std::max(s.max_iterations, iters);
    s.agreement += agrees ? 1 : 0;
}

void check_inputs(const std::vector<int>& orders, std::uint32_t trials) {
    if (orders.empty()) throw Error(ErrorCode::InvalidArgument, "no orders to benchmark");
    if (trials == 0) throw Error(ErrorCode::InvalidArgument, "trials must be positive");
}

}  // namespace

SearchKey bench_key(std::uint64_t seed, int order, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(order), static_cast<std::uint32_t>(trial),
                      static_cast<std::uint32_t>(trial >> 32)};
    std::mt19937_64 rng(seq);
    const Int n = order;
    const Int q = std::uniform_int_distribution<Int>(n + 1, 100 * n)(rng);
    const Int p = std::uniform_int_distribution<Int>(0, q)(rng);
    return SearchKey{p, q};
}

std::vector<OrderStats> bench_iterations_serial(const std::vector<int>& orders,
                                                std::uint32_t trials, std::uint64_t seed) {
    check_inputs(orders, trials);
    std::vector<OrderStats> out;
    for (int order : orders) {
        const FareySequence seq(order);
        const FareyTable table = build_table(seq);
        OrderStats stats;
        stats.order = order;
        start(stats.binary, Algorithm::binary, trials);
        start(stats.regula, Algorithm::regula_falsi, trials);
        for (std::uint64_t t = 0; t < trials; ++t) {
            const TrialOutcome o = run_trial(seq, table, seed, t);
            accumulate(stats.binary, o.binary_iters, o.binary_agrees);
            accumulate(stats.regula, o.regula_iters, o.regula_agrees);
        }
        out.push_back(stats);
    }
    return out;
}

std::vector<OrderStats> bench_iterations(const std::vector<int>& orders, std::uint32_t trials,
                                         std::uint64_t seed) {
    check_inputs(orders, trials);
    std::vector<OrderStats> out;
    for (int order : orders) {
        const FareySequence seq(order);
        const FareyTable table = build_table(seq);
        std::vector<TrialOutcome> outcomes(trials);
        const auto count = static_cast<std::int64_t>(trials);

#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t t = 0; t < count; ++t)
            outcomes[static_cast<std::size_t>(t)] =
                run_trial(seq, table, seed, static_cast<std::uint64_t>(t));

        // Reduce in trial order; integer sums make this order-independent anyway.
        OrderStats stats;
        stats.order = order;
        start(stats.binary, Algorithm::binary, trials);
        start(stats.regula, Algorithm::regula_falsi, trials);
        for (const TrialOutcome& o : outcomes) {
            accumulate(stats.binary, o.binary_iters, o.binary_agrees);
            accumulate(stats.regula, o.regula_iters, o.regula_agrees);
        }
        out.push_back(stats);
    }
    return out;
}

std::string mean_iterations(const IterationStats& stats) {
    if (stats.trials == 0) return "0.0000";
    return to_decimal(Fraction::make(static_cast<Int>(stats.total_iterations),
                                     static_cast<Int>(stats.trials)),
                      4);
}

std::string bench_csv(const std::vector<OrderStats>& stats, std::uint64_t seed) {
    std::ostringstream out;
    out << "# keys: q uniform in [n+1,100n], p uniform in [0,q]; seed=" << seed << "\n";
    out << "order,algo,trials,mean_iters,min_iters,max_iters,agreement\n";
    for (const OrderStats& s : stats) {
        for (const IterationStats* a : {&s.binary, &s.regula}) {
            out << s.order << ',' << to_string(a->algorithm) << ',' << a->trials << ','
                << mean_iterations(*a) << ',' << a->min_iterations << ',' << a->max_iterations
                << ',' << a->agreement << '\n';
        }
    }
    return out.str();
}

}  // namespace farey
