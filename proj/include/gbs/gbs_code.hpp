#pragma once

#include <utility>
#include <vector>

#include "gbs/subsystem.hpp"

namespace gbs {

/// Subsystem code built from a binary matrix: one qubit per set entry, an
/// XX gauge generator for each consecutive occupied pair within a row and a
/// ZZ generator for each consecutive occupied pair within a column. Qubits
/// are indexed row-major over the occupied cells.
struct GBSCode {
    BitMatrix matrix;
    SubsystemCode code;
    // cell (r,c) -> qubit index, npos when empty; row-major over cells
    std::vector<std::size_t> cell_to_qubit;

    std::size_t qubit_at(std::size_t r, std::size_t c) const {
        return cell_to_qubit[r * matrix.cols() + c];
    }
};

GBSCode build_gbs(const BitMatrix& a);

/// Parameters predicted from the matrix alone: n = weight, k = rank,
/// d_row/d_col = minimum weights of the row and column spans,
/// d = min(d_row, d_col).
struct TheoreticalParams {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d_row = 0;
    std::size_t d_col = 0;
    std::size_t d = 0;
};

TheoreticalParams theoretical_params(const BitMatrix& a, std::uint64_t cap = kDefaultEnumCap);

/// Z on every occupied cell of row i (identity for an empty row).
PauliOp row_operator(const GBSCode& code, std::size_t i);
/// X on every occupied cell of column j.
PauliOp column_operator(const GBSCode& code, std::size_t j);

/// k pairs (X-type, Z-type) of bare logical operators: the X members are
/// products of column operators, the Z members products of row operators,
/// and their symplectic products form the identity pattern.
std::vector<std::pair<PauliOp, PauliOp>> bare_logical_basis(const GBSCode& code);

}  // namespace gbs
