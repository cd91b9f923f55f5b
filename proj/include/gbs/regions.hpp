#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "gbs/subsystem.hpp"

namespace gbs {

/// A subset of the qubits of a fixed n-qubit system.
class Region {
public:
    explicit Region(std::size_t n) : mask_(n) {}
    static Region all(std::size_t n);
    static Region of(std::size_t n, std::initializer_list<std::size_t> qubits);
    static Region from_indices(std::size_t n, std::span<const std::size_t> qubits);

    std::size_t universe() const { return mask_.size(); }
    std::size_t count() const { return mask_.weight(); }
    bool contains(std::size_t q) const { return mask_.get(q); }
    void add(std::size_t q) { mask_.set(q, true); }

    Region complement() const;
    std::vector<std::size_t> indices() const;
    const BitVector& mask() const { return mask_; }

    bool operator==(const Region&) const = default;

private:
    BitVector mask_;
};

/// Group obtained by restricting every element of g to M (coordinate
/// projection in symplectic form). Returned on the full qubit set,
/// supported inside M.
GroupBasis restrict_group(const GroupBasis& g, const Region& m);

/// Subgroup of the elements of g supported entirely inside M.
GroupBasis supported_subgroup(const GroupBasis& g, const Region& m);

/// Number of independent dressed logical operators supported inside M:
/// dim(centralizer of the restricted stabilizer, within M's Pauli group)
/// minus dim(gauge elements supported in M).
std::size_t dressed_logical_dim(const SubsystemCode& code, const Region& m);

/// Number of independent bare logical operators supported inside M:
/// dim(centralizer of the restricted gauge group, within M's Pauli group)
/// minus dim(stabilizer elements supported in M).
std::size_t bare_logical_dim(const SubsystemCode& code, const Region& m);

/// All qubits outside M whose cell lies within Chebyshev distance `range`
/// of some qubit of M (layers ignored).
Region boundary_region(const Layout& layout, const Region& m, std::size_t range);

/// The complementary-region identity:
/// bare_logical_dim(M) + dressed_logical_dim(~M) == 2k.
bool cleaning_identity_holds(const SubsystemCode& code, const Region& m);

struct RestrictionReport {
    std::size_t k_restricted = 0;
    std::size_t boundary_size = 0;
    std::size_t distance = 0;  // of the parent code
    std::optional<std::size_t> restricted_distance;
    bool conclusive = false;  // false when the inner distance sweep hit its cap
    bool holds = false;       // k_restricted == 0 or d' >= d - |boundary|
};

/// Restrict the gauge group to M, derive the restricted code, and check
/// that it either has no logical qubits or has distance at least
/// d - |boundary|. An infeasible inner sweep makes the report inconclusive.
RestrictionReport restriction_check(const SubsystemCode& code, const Region& m,
                                    std::size_t range,
                                    std::optional<std::size_t> known_distance = std::nullopt,
                                    std::uint64_t cap = kDefaultEnumCap);

/// A non-identity element of g acting trivially on every qubit of M, when
/// one exists (guaranteed when 2|M| < dim g).
std::optional<PauliOp> trivial_action_witness(const GroupBasis& g, const Region& m);

}  // namespace gbs
