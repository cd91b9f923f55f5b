#include "gbs/regions.hpp"

namespace gbs {

Region Region::all(std::size_t n) {
    Region r(n);
    for (std::size_t q = 0; q < n; ++q) r.add(q);
    return r;
}

Region Region::of(std::size_t n, std::initializer_list<std::size_t> qubits) {
    Region r(n);
    for (std::size_t q : qubits) {
        if (q >= n) throw IndexOutOfRange("region qubit out of range");
        r.add(q);
    }
    return r;
}

Region Region::from_indices(std::size_t n, std::span<const std::size_t> qubits) {
    Region r(n);
    for (std::size_t q : qubits) {
        if (q >= n) throw IndexOutOfRange("region qubit out of range");
        r.add(q);
    }
    return r;
}

Region Region::complement() const {
    Region r(universe());
    for (std::size_t q = 0; q < universe(); ++q)
        if (!contains(q)) r.add(q);
    return r;
}

std::vector<std::size_t> Region::indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t q = 0; q < universe(); ++q)
        if (contains(q)) out.push_back(q);
    return out;
}

namespace {

PauliOp mask_to(const PauliOp& p, const Region& m) {
    PauliOp out(p.qubits());
    for (std::size_t q = 0; q < p.qubits(); ++q) {
        if (!m.contains(q)) continue;
        if (p.x.get(q)) out.x.set(q, true);
        if (p.z.get(q)) out.z.set(q, true);
    }
    return out;
}

// Rewrite p onto the qubits of M only (in increasing index order).
PauliOp compress_to(const PauliOp& p, const std::vector<std::size_t>& idx) {
    PauliOp out(idx.size());
    for (std::size_t t = 0; t < idx.size(); ++t) {
        if (p.x.get(idx[t])) out.x.set(t, true);
        if (p.z.get(idx[t])) out.z.set(t, true);
    }
    return out;
}

GroupBasis compress_group(const GroupBasis& g, const std::vector<std::size_t>& idx) {
    std::vector<PauliOp> gens;
    gens.reserve(g.dim());
    for (const auto& gen : g.generators()) gens.push_back(compress_to(gen, idx));
    return GroupBasis::from_generators(idx.size(), gens);
}

}  // namespace

GroupBasis restrict_group(const GroupBasis& g, const Region& m) {
    if (m.universe() != g.qubits()) throw DimensionMismatch("region universe mismatch");
    std::vector<PauliOp> gens;
    gens.reserve(g.dim());
    for (const auto& gen : g.generators()) gens.push_back(mask_to(gen, m));
    return GroupBasis::from_generators(g.qubits(), gens);
}

GroupBasis supported_subgroup(const GroupBasis& g, const Region& m) {
    if (m.universe() != g.qubits()) throw DimensionMismatch("region universe mismatch");
    const std::size_t dg = g.dim();
    if (dg == 0) return GroupBasis(g.qubits());
    // Kernel of the project-to-complement map on g's basis.
    const auto outside = m.complement().indices();
    BitMatrix constraints(2 * outside.size(), dg);
    for (std::size_t j = 0; j < dg; ++j) {
        const PauliOp& gen = g.generators()[j];
        for (std::size_t t = 0; t < outside.size(); ++t) {
            if (gen.x.get(outside[t])) constraints.set(2 * t, j, true);
            if (gen.z.get(outside[t])) constraints.set(2 * t + 1, j, true);
        }
    }
    auto combos = kernel_basis(constraints);
    std::vector<PauliOp> elements;
    elements.reserve(combos.size());
    for (const auto& c : combos) {
        PauliOp p(g.qubits());
        for (std::size_t i = 0; i < dg; ++i)
            if (c.get(i)) p *= g.generators()[i];
        elements.push_back(std::move(p));
    }
    return GroupBasis::from_generators(g.qubits(), elements);
}

std::size_t dressed_logical_dim(const SubsystemCode& code, const Region& m) {
    if (m.universe() != code.n) throw DimensionMismatch("region universe mismatch");
    const auto idx = m.indices();
    const GroupBasis restricted_stab = compress_group(code.stabilizer, idx);
    const std::size_t centralizer_dim = centralizer(restricted_stab).dim();
    const std::size_t supported = supported_subgroup(code.gauge, m).dim();
    return centralizer_dim - supported;
}

std::size_t bare_logical_dim(const SubsystemCode& code, const Region& m) {
    if (m.universe() != code.n) throw DimensionMismatch("region universe mismatch");
    const auto idx = m.indices();
    const GroupBasis restricted_gauge = compress_group(code.gauge, idx);
    const std::size_t centralizer_dim = centralizer(restricted_gauge).dim();
    const std::size_t supported = supported_subgroup(code.stabilizer, m).dim();
    return centralizer_dim - supported;
}

Region boundary_region(const Layout& layout, const Region& m, std::size_t range) {
    if (m.universe() != layout.size()) throw MissingLayout("layout does not cover the region");
    Region out(m.universe());
    const auto inside = m.indices();
    for (std::size_t q = 0; q < m.universe(); ++q) {
        if (m.contains(q)) continue;
        for (std::size_t p : inside) {
            if (cell_distance(layout.position(q), layout.position(p)) <=
                static_cast<std::int64_t>(range)) {
                out.add(q);
                break;
            }
        }
    }
    return out;
}

bool cleaning_identity_holds(const SubsystemCode& code, const Region& m) {
    return bare_logical_dim(code, m) + dressed_logical_dim(code, m.complement()) == 2 * code.k;
}

RestrictionReport restriction_check(const SubsystemCode& code, const Region& m,
                                    std::size_t range, std::optional<std::size_t> known_distance,
                                    std::uint64_t cap) {
    if (!code.layout) throw MissingLayout("restriction check needs a layout");
    RestrictionReport report;
    report.distance = known_distance ? *known_distance : *distance_full(code, cap).value;
    report.boundary_size = boundary_region(*code.layout, m, range).count();

    // Generators of the restricted code are the gauge generators cut to M.
    const auto idx = m.indices();
    std::vector<PauliOp> gens;
    gens.reserve(code.gauge_generators.size());
    for (const auto& g : code.gauge_generators) gens.push_back(compress_to(g, idx));
    SubsystemCode restricted = derive_code(idx.size(), std::move(gens));
    report.k_restricted = restricted.k;

    if (restricted.k == 0) {
        report.conclusive = true;
        report.holds = true;
        return report;
    }
    try {
        const std::size_t d_restricted = *distance_full(restricted, cap).value;
        report.restricted_distance = d_restricted;
        report.conclusive = true;
        report.holds = d_restricted + report.boundary_size >= report.distance;
    } catch (const CapExceeded&) {
        report.conclusive = false;
    }
    return report;
}

std::optional<PauliOp> trivial_action_witness(const GroupBasis& g, const Region& m) {
    if (m.universe() != g.qubits()) throw DimensionMismatch("region universe mismatch");
    const std::size_t dg = g.dim();
    if (dg == 0) return std::nullopt;
    const auto inside = m.indices();
    BitMatrix constraints(2 * inside.size(), dg);
    for (std::size_t j = 0; j < dg; ++j) {
        const PauliOp& gen = g.generators()[j];
        for (std::size_t t = 0; t < inside.size(); ++t) {
            if (gen.x.get(inside[t])) constraints.set(2 * t, j, true);
            if (gen.z.get(inside[t])) constraints.set(2 * t + 1, j, true);
        }
    }
    auto combos = kernel_basis(constraints);
    if (combos.empty()) return std::nullopt;
    // Any nonzero combination of independent generators is non-identity.
    PauliOp p(g.qubits());
    for (std::size_t i = 0; i < dg; ++i)
        if (combos[0].get(i)) p *= g.generators()[i];
    return p;
}

}  // namespace gbs
