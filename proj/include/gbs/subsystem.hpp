#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gbs/gf2.hpp"
#include "gbs/layout.hpp"
#include "gbs/pauli.hpp"

namespace gbs {

/// A subsystem code derived from a gauge group: the stabilizer group is
/// gauge ∩ centralizer(gauge); k counts logical qubits, g gauge qubits,
/// and n = dim(stabilizer) + k + g.
struct SubsystemCode {
    std::size_t n = 0;
    std::vector<PauliOp> gauge_generators;  // as supplied, order preserved
    GroupBasis gauge;                       // canonical span of the above
    GroupBasis stabilizer;
    std::size_t k = 0;
    std::size_t g = 0;
    std::optional<Layout> layout;
};

/// Derive the stabilizer group and qubit counts from gauge generators.
/// All generators must act on `n` qubits; a layout, when given, must cover
/// all of them.
SubsystemCode derive_code(std::size_t n, std::vector<PauliOp> gauge_generators,
                          std::optional<Layout> layout = std::nullopt);

/// True iff p commutes with every stabilizer generator and lies outside the
/// gauge group: a non-trivial dressed logical operator.
bool is_dressed_logical(const SubsystemCode& code, const PauliOp& p);

enum class DistanceMode { full, bounded };

struct DistanceResult {
    DistanceMode mode = DistanceMode::full;
    /// Exact distance when set. In bounded mode it is set only when a
    /// dressed logical of weight <= w_max was found.
    std::optional<std::size_t> value;
    /// No dressed logical operator has weight <= this.
    std::size_t certified_lower_bound = 0;
    std::optional<PauliOp> witness;
};

/// Exact distance: minimum weight over every element of the stabilizer
/// centralizer outside the gauge group, found by a Gray-code sweep of the
/// full centralizer. Requires k >= 1 and 2^dim(centralizer) <= cap.
/// Single-threaded sweeps return the first witness of minimal weight in
/// Gray order over the canonical centralizer basis.
DistanceResult distance_full(const SubsystemCode& code, std::uint64_t cap = kDefaultEnumCap);

/// Weight-limited search: enumerates every Pauli of weight w = 1..w_max
/// (supports in colexicographic order, letters in X<Z<Y order) and returns
/// the first dressed logical found (which is then the exact distance) or
/// certifies that the distance exceeds w_max.
DistanceResult distance_bounded(const SubsystemCode& code, std::size_t w_max);

}  // namespace gbs
