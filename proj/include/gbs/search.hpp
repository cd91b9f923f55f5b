#pragma once

#include <optional>
#include <string>

#include "gbs/gf2.hpp"
#include "gbs/rng.hpp"

namespace gbs {

/// H2(p) = -p log2 p - (1-p) log2 (1-p); endpoints map to 0.
double binary_entropy(double p);

/// True iff alpha < 1 - H2(beta). Requires alpha > 0 and 0 < beta < 1/2.
bool gv_feasible(double alpha, double beta);

/// Uniform sample from the m x m binary matrices of rank k, via a product
/// of uniformly drawn full-rank m x k and k x m factors (every rank-k
/// matrix has the same number of such factorizations).
BitMatrix sample_fixed_rank(std::size_t m, std::size_t k, Xoshiro256& rng);

struct GVQuery {
    std::size_t m = 0;
    std::size_t k = 0;
    double beta = 0.0;            // target min distance fraction, in (0, 1/2)
    std::uint64_t max_trials = 0;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

struct GVResult {
    bool found = false;
    std::optional<BitMatrix> matrix;
    std::uint64_t trials_used = 0;
    std::size_t d_row = 0;  // of the returned matrix
    std::size_t d_col = 0;
    std::uint64_t seed = 0;
    std::string rng;
};

/// Sample fixed-rank matrices until one has both row- and column-space
/// minimum weights >= ceil(beta*m), or the budget runs out. Each trial draws
/// from its own (seed, trial)-derived stream and the first success by trial
/// index wins, so results are identical across thread counts.
GVResult gv_search(const GVQuery& query);

}  // namespace gbs
