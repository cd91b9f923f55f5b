#include "gbs/bounds.hpp"

#include <bit>
#include <cassert>

namespace gbs {

BitMatrix hadamard_matrix(std::size_t k) {
    if (k < 1) throw OutOfRange("pattern length must be at least 1");
    if (k > 12) throw TooLarge("hadamard matrix guarded at k <= 12");
    const std::size_t size = (std::size_t(1) << k) - 1;
    BitMatrix a(size, size);
    for (std::size_t x = 1; x <= size; ++x)
        for (std::size_t y = 1; y <= size; ++y)
            if (std::popcount(x & y) & 1u) a.set(x - 1, y - 1, true);
    return a;
}

BoundReport check_bounds(const BitMatrix& a, std::uint64_t cap) {
    if (a.weight() == 0) throw EmptyMatrix("matrix has no nonzero entries");
    const TheoreticalParams p = theoretical_params(a, cap);
    if (p.k == 0) throw NoLogicalQubits("no logical qubits");
    if (p.k > 40) throw TooLarge("refined bound arithmetic guarded at k <= 40");

    BoundReport r;
    r.n = p.n;
    r.k = p.k;
    r.d_row = p.d_row;
    r.d_col = p.d_col;
    r.d = p.d;

    const long long n = static_cast<long long>(p.n);
    const long long area = static_cast<long long>(p.d_row) * static_cast<long long>(p.d_col);
    const long long pow2k = 1ll << p.k;

    r.square_slack_left = area - static_cast<long long>(p.d) * static_cast<long long>(p.d);
    r.square_slack_right = n - area;
    r.square_bound_ok = r.square_slack_left >= 0 && r.square_slack_right >= 0;

    r.refined_slack = n * pow2k - 2 * area * (pow2k - 1);
    r.refined_bound_ok = r.refined_slack >= 0;

    r.rate_slack = n - static_cast<long long>(p.k) * static_cast<long long>(p.d);
    r.rate_bound_ok = r.rate_slack >= 0;
    return r;
}

namespace {

// Greedy selection of the first linearly independent rows, in index order.
std::vector<std::size_t> independent_rows(const BitMatrix& a, std::size_t want) {
    std::vector<std::size_t> selected;
    std::vector<BitVector> echelon;
    for (std::size_t r = 0; r < a.rows() && selected.size() < want; ++r) {
        BitVector v = a.row(r);
        for (const auto& e : echelon) {
            const std::size_t p = e.leading_bit();
            if (v.get(p)) v ^= e;
        }
        if (v.is_zero()) continue;
        selected.push_back(r);
        echelon.push_back(std::move(v));
        // keep echelon rows sorted by pivot for the reduction above
        for (std::size_t i = echelon.size(); i > 1; --i) {
            if (echelon[i - 1].leading_bit() < echelon[i - 2].leading_bit())
                std::swap(echelon[i - 1], echelon[i - 2]);
            else
                break;
        }
    }
    return selected;
}

std::uint32_t column_pattern(const BitMatrix& generating, std::size_t col) {
    std::uint32_t pattern = 0;
    for (std::size_t t = 0; t < generating.rows(); ++t)
        if (generating.get(t, col)) pattern |= (1u << t);
    return pattern;
}

// Solve X * M = I over GF(2) for invertible X.
BitMatrix invert(const BitMatrix& x) {
    const std::size_t k = x.rows();
    assert(x.cols() == k);
    std::vector<BitVector> rows;
    rows.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        // augmented row [x_i | e_i]
        BitVector v(2 * k);
        for (std::size_t j = 0; j < k; ++j)
            if (x.get(i, j)) v.set(j, true);
        v.set(k + i, true);
        rows.push_back(std::move(v));
    }
    rows = row_reduce(std::move(rows));
    BitMatrix inv(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        assert(rows[i].leading_bit() == i);
        for (std::size_t j = 0; j < k; ++j)
            if (rows[i].get(k + j)) inv.set(i, j, true);
    }
    return inv;
}

}  // namespace

Profile make_profile(const BitMatrix& a) {
    const std::size_t k = rank(a);
    if (k == 0) throw NoLogicalQubits("zero-rank matrix has no profile");
    if (k > 20) throw TooLarge("profile pattern tables guarded at k <= 20");

    Profile p;
    p.k = k;
    p.row_basis = independent_rows(a, k);
    const BitMatrix at = a.transposed();
    p.col_basis = independent_rows(at, k);
    assert(p.row_basis.size() == k && p.col_basis.size() == k);

    // generating matrix from the selected rows (k x cols)
    std::vector<BitVector> grow_rows;
    for (std::size_t r : p.row_basis) grow_rows.push_back(a.row(r));
    const BitMatrix g_row = BitMatrix::from_rows(std::move(grow_rows));
    std::vector<BitVector> gcol_rows;
    for (std::size_t c : p.col_basis) gcol_rows.push_back(at.row(c));
    const BitMatrix g_col = BitMatrix::from_rows(std::move(gcol_rows));

    const std::size_t patterns = std::size_t(1) << k;
    p.row_pattern_counts.assign(patterns, 0);
    p.col_pattern_counts.assign(patterns, 0);
    for (std::size_t c = 0; c < g_row.cols(); ++c)
        ++p.row_pattern_counts[column_pattern(g_row, c)];
    for (std::size_t c = 0; c < g_col.cols(); ++c)
        ++p.col_pattern_counts[column_pattern(g_col, c)];

    // X = A[row_basis x col_basis] is invertible; basis_change = X^{-1}
    // sends a row's pattern over the selected columns to its coordinates
    // over the selected rows.
    BitMatrix x(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (a.get(p.row_basis[i], p.col_basis[j])) x.set(i, j, true);
    p.basis_change = invert(x);
    return p;
}

bool verify_feasibility(const Profile& p, std::size_t n, std::size_t d_row, std::size_t d_col) {
    const std::size_t patterns = std::size_t(1) << p.k;
    if (p.row_pattern_counts.size() != patterns || p.col_pattern_counts.size() != patterns)
        return false;

    auto odd_overlap_sum = [&](const std::vector<std::uint32_t>& counts, std::size_t y) {
        std::uint64_t total = 0;
        for (std::size_t x = 0; x < patterns; ++x)
            if (std::popcount(x & y) & 1u) total += counts[x];
        return total;
    };
    for (std::size_t y = 1; y < patterns; ++y) {
        if (odd_overlap_sum(p.row_pattern_counts, y) < d_row) return false;
        if (odd_overlap_sum(p.col_pattern_counts, y) < d_col) return false;
    }

    // basis_change columns as patterns, for applying x -> x*M bitwise
    std::vector<std::uint32_t> m_cols(p.k, 0);
    for (std::size_t j = 0; j < p.k; ++j)
        for (std::size_t i = 0; i < p.k; ++i)
            if (p.basis_change.get(i, j)) m_cols[j] |= (1u << i);
    auto apply_change = [&](std::size_t x) {
        std::uint32_t out = 0;
        for (std::size_t j = 0; j < p.k; ++j)
            if (std::popcount(x & m_cols[j]) & 1u) out |= (1u << j);
        return out;
    };

    // area identity: sum over rows of their weights, written in pattern counts
    std::uint64_t total = 0;
    for (std::size_t x = 0; x < patterns; ++x) {
        if (!p.col_pattern_counts[x]) continue;
        const std::uint32_t z = apply_change(x);
        std::uint64_t row_weight = 0;
        for (std::size_t y = 0; y < patterns; ++y)
            if (std::popcount(z & static_cast<std::uint32_t>(y)) & 1u)
                row_weight += p.row_pattern_counts[y];
        total += std::uint64_t(p.col_pattern_counts[x]) * row_weight;
    }
    return total == n;
}

}  // namespace gbs
