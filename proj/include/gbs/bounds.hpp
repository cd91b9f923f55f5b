#pragma once

#include <cstdint>
#include <vector>

#include "gbs/gbs_code.hpp"

namespace gbs {

/// The (2^k - 1) x (2^k - 1) binary inner-product matrix A[x][y] = x.y over
/// the nonzero k-bit patterns. Symmetric, rank k, every row and column of
/// weight 2^(k-1); its codes meet the refined area bound with equality.
BitMatrix hadamard_matrix(std::size_t k);

/// Integer-exact evaluation of the three parameter bounds. The refined
/// bound is checked with cleared denominators:
/// 2*d_row*d_col*(2^k - 1) <= n*2^k.
struct BoundReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d_row = 0;
    std::size_t d_col = 0;
    std::size_t d = 0;
    bool square_bound_ok = false;   // d^2 <= d_row*d_col <= n
    bool refined_bound_ok = false;  // 2*d_row*d_col*(1 - 2^-k) <= n
    bool rate_bound_ok = false;     // k*d <= n
    // slack = (right side) - (left side), in the units of each check
    long long square_slack_left = 0;   // d_row*d_col - d^2
    long long square_slack_right = 0;  // n - d_row*d_col
    long long refined_slack = 0;       // n*2^k - 2*d_row*d_col*(2^k - 1)
    long long rate_slack = 0;          // n - k*d
};

BoundReport check_bounds(const BitMatrix& a, std::uint64_t cap = kDefaultEnumCap);

/// Column-multiplicity profile of a matrix: the first k independent rows
/// form one generating matrix, the first k independent columns the other;
/// counts index k-bit column patterns (bit t = basis row t). basis_change
/// is the invertible k x k matrix sending a row's leading pattern to its
/// coordinates over the row basis.
struct Profile {
    std::size_t k = 0;
    std::vector<std::uint32_t> row_pattern_counts;  // size 2^k
    std::vector<std::uint32_t> col_pattern_counts;  // size 2^k
    BitMatrix basis_change;
    std::vector<std::size_t> row_basis;  // selected row indices, greedy in order
    std::vector<std::size_t> col_basis;
};

Profile make_profile(const BitMatrix& a);

/// Check the profile constraints against the given parameters: counts
/// non-negative, every nonzero pattern's odd-overlap count sum reaching
/// d_row resp. d_col, and the quadratic area identity summing to n.
/// True for every profile taken from a genuine matrix.
bool verify_feasibility(const Profile& p, std::size_t n, std::size_t d_row, std::size_t d_col);

}  // namespace gbs
