#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <vector>

#include "gbs/errors.hpp"

namespace gbs {

struct CellPos {
    std::int64_t row = 0;
    std::int64_t col = 0;
    int layer = 0;  // 0 or 1; at most two qubits share a cell

    bool operator==(const CellPos&) const = default;
};

/// Chebyshev distance between cells; the layer never enters, so the two
/// layers of one cell are at distance zero.
inline std::int64_t cell_distance(const CellPos& a, const CellPos& b) {
    const std::int64_t dr = std::llabs(a.row - b.row);
    const std::int64_t dc = std::llabs(a.col - b.col);
    return dr > dc ? dr : dc;
}

/// Map from qubit index to a 2D grid position.
struct Layout {
    std::size_t grid_rows = 0;
    std::size_t grid_cols = 0;
    std::vector<CellPos> positions;  // indexed by qubit

    std::size_t size() const { return positions.size(); }

    const CellPos& position(std::size_t qubit) const {
        if (qubit >= positions.size()) throw IndexOutOfRange("qubit has no layout position");
        return positions[qubit];
    }

    std::optional<std::size_t> qubit_at(const CellPos& pos) const {
        for (std::size_t q = 0; q < positions.size(); ++q)
            if (positions[q] == pos) return q;
        return std::nullopt;
    }

    /// Enforces one qubit per (row, col, layer) slot.
    void validate() const {
        for (std::size_t a = 0; a < positions.size(); ++a) {
            if (positions[a].layer != 0 && positions[a].layer != 1)
                throw Error("layout layer must be 0 or 1");
            for (std::size_t b = a + 1; b < positions.size(); ++b)
                if (positions[a] == positions[b]) throw Error("two qubits share a layout slot");
        }
    }
};

}  // namespace gbs
