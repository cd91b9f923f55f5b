#include "gbs/gf2.hpp"

#include <bit>
#include <limits>
#include <string>

namespace gbs {

std::vector<BitVector> row_reduce(std::vector<BitVector> rows) {
    if (rows.empty()) return rows;
    const std::size_t width = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != width) throw DimensionMismatch("ragged rows in row_reduce");

    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < width && pivot_row < rows.size(); ++c) {
        std::size_t r = pivot_row;
        while (r < rows.size() && !rows[r].get(c)) ++r;
        if (r == rows.size()) continue;
        std::swap(rows[pivot_row], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != pivot_row && rows[i].get(c)) rows[i] ^= rows[pivot_row];
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return rows;
}

std::size_t rank(const BitMatrix& a) {
    std::vector<BitVector> rows(a.row_span().begin(), a.row_span().end());
    return row_reduce(std::move(rows)).size();
}

std::vector<BitVector> kernel_basis(const BitMatrix& a) {
    const std::size_t cols = a.cols();
    std::vector<BitVector> rows(a.row_span().begin(), a.row_span().end());
    rows = row_reduce(std::move(rows));

    std::vector<std::size_t> pivots;
    pivots.reserve(rows.size());
    std::vector<bool> is_pivot(cols, false);
    for (const auto& r : rows) {
        std::size_t p = r.leading_bit();
        pivots.push_back(p);
        is_pivot[p] = true;
    }

    std::vector<BitVector> basis;
    basis.reserve(cols - rows.size());
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        BitVector v(cols);
        v.set(f, true);
        // pivot coordinates follow from the reduced rows: v_p = row_f
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i].get(f)) v.set(pivots[i], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

SpanSolver::SpanSolver(std::span<const BitVector> basis) {
    basis_count_ = basis.size();
    width_ = basis.empty() ? 0 : basis[0].size();
    echelon_.assign(basis.begin(), basis.end());
    combo_.reserve(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        combo_.push_back(BitVector::unit(basis.size(), i));

    // Row reduce, applying the same operations to the combination tracker.
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < width_ && pivot_row < echelon_.size(); ++c) {
        std::size_t r = pivot_row;
        while (r < echelon_.size() && !echelon_[r].get(c)) ++r;
        if (r == echelon_.size()) continue;
        std::swap(echelon_[pivot_row], echelon_[r]);
        std::swap(combo_[pivot_row], combo_[r]);
        for (std::size_t i = 0; i < echelon_.size(); ++i) {
            if (i != pivot_row && echelon_[i].get(c)) {
                echelon_[i] ^= echelon_[pivot_row];
                combo_[i] ^= combo_[pivot_row];
            }
        }
        pivots_.push_back(c);
        ++pivot_row;
    }
    if (pivot_row != echelon_.size())
        throw Error("SpanSolver requires an independent basis");
}

bool SpanSolver::contains(const BitVector& v) const {
    if (v.size() != width_) throw DimensionMismatch("vector width mismatch in SpanSolver");
    BitVector rem = v;
    for (std::size_t i = 0; i < echelon_.size(); ++i)
        if (rem.get(pivots_[i])) rem ^= echelon_[i];
    return rem.is_zero();
}

std::optional<BitVector> SpanSolver::solve(const BitVector& v) const {
    if (v.size() != width_) throw DimensionMismatch("vector width mismatch in SpanSolver");
    BitVector rem = v;
    BitVector coeff(basis_count_);
    for (std::size_t i = 0; i < echelon_.size(); ++i) {
        if (rem.get(pivots_[i])) {
            rem ^= echelon_[i];
            coeff ^= combo_[i];
        }
    }
    if (!rem.is_zero()) return std::nullopt;
    return coeff;
}

std::optional<BitVector> membership(std::span<const BitVector> basis, const BitVector& v) {
    return SpanSolver(basis).solve(v);
}

MinWeightResult min_weight_nonzero(std::span<const BitVector> basis, std::uint64_t cap,
                                   std::size_t stop_at) {
    auto gens = row_reduce(std::vector<BitVector>(basis.begin(), basis.end()));
    if (gens.empty()) throw EmptyCode("span contains no nonzero vectors");
    const std::size_t b = gens.size();
    if (b >= 63 || (std::uint64_t(1) << b) > cap)
        throw CapExceeded("span enumeration over 2^" + std::to_string(b) +
                          " elements exceeds cap");

    const auto& ops = kernels::active();
    const std::size_t nwords = gens[0].word_count();
    BitVector cur(gens[0].size());
    std::size_t best = std::numeric_limits<std::size_t>::max();
    BitVector witness;

    const std::uint64_t total = std::uint64_t(1) << b;
    for (std::uint64_t t = 1; t < total; ++t) {
        // Gray-code step: between t-1 and t exactly generator ctz(t) flips.
        const unsigned gi = static_cast<unsigned>(std::countr_zero(t));
        const std::size_t w =
            ops.xor_popcount(cur.word_data(), gens[gi].word_data(), nwords);
        if (w < best) {
            best = w;
            witness = cur;
            if (best <= stop_at) break;
        }
    }
    return {best, witness};
}

}  // namespace gbs
