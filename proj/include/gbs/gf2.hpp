#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gbs/bitvec.hpp"

namespace gbs {

/// Default enumeration budget for brute-force span walks.
inline constexpr std::uint64_t kDefaultEnumCap = std::uint64_t(1) << 26;

/// Rank of A over GF(2).
std::size_t rank(const BitMatrix& a);

/// Basis of the right null space {v : A*v = 0}. The returned vectors are
/// independent; their count is cols(A) - rank(A).
std::vector<BitVector> kernel_basis(const BitMatrix& a);

/// Reduced row echelon form of the span of `rows`: zero rows dropped, rows
/// ordered by pivot, every pivot column cleared elsewhere. Pivots are chosen
/// leftmost-first with first-nonzero-row tie-breaking; the result is the
/// unique canonical basis of the row space.
std::vector<BitVector> row_reduce(std::vector<BitVector> rows);

/// Precomputed solver for repeated span queries against a fixed basis.
class SpanSolver {
public:
    SpanSolver() = default;
    /// Basis vectors must be independent.
    explicit SpanSolver(std::span<const BitVector> basis);

    bool contains(const BitVector& v) const;
    /// Coefficients c with sum_i c_i * basis_i = v, or nullopt if v is
    /// outside the span. c has one bit per original basis vector.
    std::optional<BitVector> solve(const BitVector& v) const;

    std::size_t dim() const { return echelon_.size(); }

private:
    std::vector<BitVector> echelon_;
    std::vector<BitVector> combo_;  // combination of original vectors per echelon row
    std::vector<std::size_t> pivots_;
    std::size_t width_ = 0;
    std::size_t basis_count_ = 0;
};

/// One-shot membership test; see SpanSolver::solve.
std::optional<BitVector> membership(std::span<const BitVector> basis, const BitVector& v);

struct MinWeightResult {
    std::size_t weight;
    BitVector witness;
};

/// Minimum Hamming weight over all nonzero vectors in the span of `basis`,
/// with one witness attaining it. The walk is a Gray-code sweep: one
/// generator xor per step, so 2^26 combinations stay in the seconds range.
///
/// Dependent inputs are reduced first, so the sweep covers each span element
/// exactly once. `stop_at`: return as soon as a combination of weight <=
/// stop_at is seen (1, the default, never sacrifices exactness; larger
/// values are for callers that only need a threshold test).
///
/// Throws EmptyCode when the span is trivial and CapExceeded when the sweep
/// would exceed `cap` combinations.
MinWeightResult min_weight_nonzero(std::span<const BitVector> basis,
                                   std::uint64_t cap = kDefaultEnumCap,
                                   std::size_t stop_at = 1);

}  // namespace gbs
