#pragma once

#include "gbs/gbs_code.hpp"

namespace gbs {

enum class AncillaKind { x_chain, z_chain, padding };

struct AncillaRecord {
    std::size_t qubit = 0;
    CellPos pos;
    AncillaKind kind = AncillaKind::padding;
};

/// Spatially local form of a matrix-built code: every gauge generator is
/// single-qubit, XX on horizontally adjacent cells, or ZZ on vertically
/// adjacent cells. Layer 0 holds the original qubits and the ancillas of
/// the row (XX) chains; layer 1 holds the ancillas of the column (ZZ)
/// chains, so a cell wanted by both kinds of chain hosts both.
struct LocalCode {
    SubsystemCode code;
    BitMatrix source_matrix;
    std::vector<AncillaRecord> ancillas;
};

/// Adjoin one fresh qubit a to the code: the gauge group gains the pair
/// coupler X_q X_a and the one-qubit generator Z_a. k and distance are
/// unchanged. The result carries no layout.
SubsystemCode extend_with_ancilla(const SubsystemCode& code, std::size_t q);

/// Replace every long-range generator by a nearest-neighbor chain through
/// ancilla qubits: row gaps between consecutive occupied cells are filled on
/// layer 0 with XX links plus a one-qubit Z per ancilla, column gaps on
/// layer 1 with ZZ links plus a one-qubit X per ancilla.
LocalCode localize(const GBSCode& gbs);

/// True iff every gauge generator is single-qubit, two-qubit XX within one
/// row at column offset <= 1, or two-qubit ZZ within one column at row
/// offset <= 1 (layers never matter: the two layers of a cell and of
/// adjacent cells count as nearest neighbors).
bool check_locality(const SubsystemCode& code);
bool check_locality(const LocalCode& local);

/// Grow the code to `target` qubits by filling unoccupied (cell, layer)
/// slots with idle qubits carrying one-qubit X and Z gauge generators;
/// k and distance are unchanged.
LocalCode pad_to(const LocalCode& local, std::size_t target);

}  // namespace gbs
