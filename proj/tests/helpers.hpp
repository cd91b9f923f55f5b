#pragma once

// Shared helpers for the test suites: deterministic random generators and
// the naive reference oracles the fast paths are checked against. Every
// oracle here recomputes from scratch and never shares code with the
// library's enumeration paths.

#include <vector>

#include "gbs/gf2.hpp"
#include "gbs/pauli.hpp"
#include "gbs/rng.hpp"
#include "gbs/subsystem.hpp"

namespace gbs::testing {

inline BitVector random_bitvector(std::size_t n, Xoshiro256& rng) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, rng.next_bit());
    return v;
}

inline BitMatrix random_bitmatrix(std::size_t rows, std::size_t cols, Xoshiro256& rng) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) m.row(r) = random_bitvector(cols, rng);
    return m;
}

inline PauliOp random_pauli(std::size_t n, Xoshiro256& rng) {
    return {random_bitvector(n, rng), random_bitvector(n, rng)};
}

inline SubsystemCode random_gauge_code(std::size_t n, Xoshiro256& rng) {
    const std::size_t count = 1 + rng.below(2 * n);
    std::vector<PauliOp> gens;
    gens.reserve(count);
    for (std::size_t i = 0; i < count; ++i) gens.push_back(random_pauli(n, rng));
    return derive_code(n, std::move(gens));
}

// Independent reference for min_weight_nonzero: walk every subset mask and
// rebuild the combination from scratch.
inline std::size_t naive_span_min_weight(const std::vector<BitVector>& basis) {
    std::size_t best = static_cast<std::size_t>(-1);
    const std::uint64_t total = std::uint64_t(1) << basis.size();
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        BitVector v(basis[0].size());
        for (std::size_t i = 0; i < basis.size(); ++i)
            if ((mask >> i) & 1u) v ^= basis[i];
        std::size_t w = 0;
        for (std::size_t b = 0; b < v.size(); ++b) w += v.get(b);
        if (!v.is_zero() && w < best) best = w;
    }
    return best;
}

// All 2^dim elements of a group, identities included.
inline std::vector<PauliOp> enumerate_group(const GroupBasis& g) {
    std::vector<PauliOp> out;
    const std::uint64_t total = std::uint64_t(1) << g.dim();
    out.reserve(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        PauliOp p(g.qubits());
        for (std::size_t i = 0; i < g.dim(); ++i)
            if ((mask >> i) & 1u) p *= g.generators()[i];
        out.push_back(std::move(p));
    }
    return out;
}

// All 4^n phaseless Paulis on n qubits; for the direct distance oracle.
inline std::vector<PauliOp> all_paulis(std::size_t n) {
    std::vector<PauliOp> out;
    const std::uint64_t total = std::uint64_t(1) << (2 * n);
    out.reserve(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        PauliOp p(n);
        for (std::size_t q = 0; q < n; ++q) {
            if ((mask >> q) & 1u) p.x.set(q, true);
            if ((mask >> (n + q)) & 1u) p.z.set(q, true);
        }
        out.push_back(std::move(p));
    }
    return out;
}

// Third, direct distance oracle: scan every Pauli, keep those commuting
// with the whole stabilizer and outside the gauge group.
inline std::size_t direct_distance(const SubsystemCode& code) {
    std::size_t best = static_cast<std::size_t>(-1);
    for (const auto& p : all_paulis(code.n)) {
        if (p.is_identity()) continue;
        bool commutes = true;
        for (const auto& s : code.stabilizer.generators())
            if (symplectic_product(p, s)) {
                commutes = false;
                break;
            }
        if (!commutes || code.gauge.contains(p)) continue;
        if (p.weight() < best) best = p.weight();
    }
    return best;
}

}  // namespace gbs::testing
