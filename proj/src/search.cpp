#include "gbs/search.hpp"

#include <atomic>
#include <cmath>
#include <thread>

namespace gbs {

double binary_entropy(double p) {
    if (p < 0.0 || p > 1.0) throw OutOfRange("probability outside [0,1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

bool gv_feasible(double alpha, double beta) {
    if (alpha <= 0.0) throw OutOfRange("alpha must be positive");
    if (beta <= 0.0 || beta >= 0.5) throw OutOfRange("beta must lie in (0, 1/2)");
    return alpha < 1.0 - binary_entropy(beta);
}

namespace {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, Xoshiro256& rng) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        BitVector& row = m.row(r);
        for (std::size_t w = 0; w < row.word_count(); ++w) row.word_data()[w] = rng.next();
        // clear bits past the logical width
        const std::size_t tail = cols % kWordBits;
        if (tail) row.word_data()[row.word_count() - 1] &= (Word(1) << tail) - 1;
    }
    return m;
}

BitMatrix random_full_rank(std::size_t rows, std::size_t cols, Xoshiro256& rng) {
    constexpr int kMaxAttempts = 4096;
    const std::size_t want = rows < cols ? rows : cols;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        BitMatrix m = random_matrix(rows, cols, rng);
        if (rank(m) == want) return m;
    }
    throw SamplingFailed("full-rank rejection sampling did not terminate");
}

}  // namespace

BitMatrix sample_fixed_rank(std::size_t m, std::size_t k, Xoshiro256& rng) {
    if (k < 1 || k > m) throw OutOfRange("rank must satisfy 1 <= k <= m");
    BitMatrix left = random_full_rank(m, k, rng);
    BitMatrix right = random_full_rank(k, m, rng);
    return left.mul(right);
}

GVResult gv_search(const GVQuery& query) {
    if (query.k < 1 || query.k > query.m) throw OutOfRange("rank must satisfy 1 <= k <= m");
    if (query.beta <= 0.0 || query.beta >= 0.5) throw OutOfRange("beta must lie in (0, 1/2)");

    const std::size_t threshold =
        static_cast<std::size_t>(std::ceil(query.beta * static_cast<double>(query.m)));
    const std::size_t probe_stop = threshold > 1 ? threshold - 1 : 1;

    // One trial is a pure function of (seed, trial index).
    auto run_trial = [&](std::uint64_t trial) -> std::optional<BitMatrix> {
        Xoshiro256 rng = Xoshiro256::for_trial(query.seed, trial);
        BitMatrix a = sample_fixed_rank(query.m, query.k, rng);
        std::vector<BitVector> rows(a.row_span().begin(), a.row_span().end());
        // stop the sweep as soon as any codeword below the target shows up
        if (min_weight_nonzero(rows, kDefaultEnumCap, probe_stop).weight < threshold)
            return std::nullopt;
        const BitMatrix t = a.transposed();
        std::vector<BitVector> cols(t.row_span().begin(), t.row_span().end());
        if (min_weight_nonzero(cols, kDefaultEnumCap, probe_stop).weight < threshold)
            return std::nullopt;
        return a;
    };

    std::uint64_t success_trial = query.max_trials;
    std::optional<BitMatrix> success_matrix;

    const unsigned workers =
        query.threads > 1 ? std::min<std::uint64_t>(query.threads, query.max_trials) : 1;
    if (workers <= 1) {
        for (std::uint64_t t = 0; t < query.max_trials; ++t) {
            if (auto a = run_trial(t)) {
                success_trial = t;
                success_matrix = std::move(a);
                break;
            }
        }
    } else {
        std::atomic<std::uint64_t> next{0};
        std::atomic<std::uint64_t> best{query.max_trials};
        auto worker = [&] {
            for (;;) {
                const std::uint64_t t = next.fetch_add(1);
                if (t >= query.max_trials || t >= best.load()) return;
                if (run_trial(t)) {
                    std::uint64_t prev = best.load();
                    while (t < prev && !best.compare_exchange_weak(prev, t)) {
                    }
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        // The smallest successful index wins regardless of completion order;
        // its matrix is a pure function of (seed, index), so recompute it.
        success_trial = best.load();
        if (success_trial < query.max_trials) success_matrix = run_trial(success_trial);
    }

    GVResult result;
    result.seed = query.seed;
    result.rng = Xoshiro256::kAlgorithm;
    if (success_trial < query.max_trials) {
        result.found = true;
        result.trials_used = success_trial + 1;
        const BitMatrix& a = *success_matrix;
        std::vector<BitVector> rows(a.row_span().begin(), a.row_span().end());
        result.d_row = min_weight_nonzero(rows).weight;
        const BitMatrix t = a.transposed();
        std::vector<BitVector> cols(t.row_span().begin(), t.row_span().end());
        result.d_col = min_weight_nonzero(cols).weight;
        result.matrix = std::move(success_matrix);
    } else {
        result.found = false;
        result.trials_used = query.max_trials;
    }
    return result;
}

}  // namespace gbs
