#include "gbs/pauli.hpp"

#include <cctype>

#include "gbs/gf2.hpp"

namespace gbs {

PauliOp::PauliOp(BitVector x_part, BitVector z_part) : x(std::move(x_part)), z(std::move(z_part)) {
    if (x.size() != z.size()) throw DimensionMismatch("x/z parts of a Pauli must match");
}

PauliOp PauliOp::single(std::size_t n, std::size_t q, char letter) {
    if (q >= n) throw IndexOutOfRange("qubit index out of range");
    PauliOp p(n);
    switch (letter) {
        case 'X': p.x.set(q, true); break;
        case 'Z': p.z.set(q, true); break;
        case 'Y':
            p.x.set(q, true);
            p.z.set(q, true);
            break;
        default: throw ParseError("Pauli letter must be X, Y or Z");
    }
    return p;
}

PauliOp PauliOp::parse(std::string_view s, std::size_t n) {
    PauliOp p(n);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip_ws();
    if (i < s.size() && s[i] == 'I') {
        ++i;
        skip_ws();
        if (i != s.size()) throw ParseError("unexpected text after identity Pauli");
        return p;
    }
    while (i < s.size()) {
        char letter = s[i];
        if (letter != 'X' && letter != 'Y' && letter != 'Z')
            throw ParseError("expected Pauli factor like X3");
        ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("Pauli factor missing qubit index");
        std::size_t q = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            q = q * 10 + static_cast<std::size_t>(s[i] - '0');
            ++i;
        }
        if (q >= n) throw ParseError("qubit index out of range in Pauli string");
        p *= single(n, q, letter);
        skip_ws();
    }
    return p;
}

std::size_t PauliOp::weight() const {
    return kernels::active().or_popcount(x.word_data(), z.word_data(), x.word_count());
}

BitVector PauliOp::to_symplectic() const {
    const std::size_t n = qubits();
    BitVector v(2 * n);
    for (std::size_t q = 0; q < n; ++q) {
        if (x.get(q)) v.set(q, true);
        if (z.get(q)) v.set(n + q, true);
    }
    return v;
}

PauliOp PauliOp::from_symplectic(const BitVector& v) {
    if (v.size() % 2) throw DimensionMismatch("symplectic vector length must be even");
    const std::size_t n = v.size() / 2;
    PauliOp p(n);
    for (std::size_t q = 0; q < n; ++q) {
        if (v.get(q)) p.x.set(q, true);
        if (v.get(n + q)) p.z.set(q, true);
    }
    return p;
}

std::string PauliOp::to_string() const {
    std::string out;
    for (std::size_t q = 0; q < qubits(); ++q) {
        const bool xb = x.get(q), zb = z.get(q);
        if (!xb && !zb) continue;
        if (!out.empty()) out += ' ';
        out += xb ? (zb ? 'Y' : 'X') : 'Z';
        out += std::to_string(q);
    }
    return out.empty() ? "I" : out;
}

int symplectic_product(const PauliOp& p, const PauliOp& q) {
    if (p.qubits() != q.qubits()) throw DimensionMismatch("qubit count mismatch");
    return static_cast<int>(p.x.dot(q.z)) ^ static_cast<int>(p.z.dot(q.x));
}

GroupBasis GroupBasis::from_generators(std::size_t n, std::span<const PauliOp> gens) {
    std::vector<BitVector> rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) {
        if (g.qubits() != n) throw DimensionMismatch("generator qubit count mismatch");
        rows.push_back(g.to_symplectic());
    }
    rows = row_reduce(std::move(rows));

    GroupBasis out(n);
    out.gens_.reserve(rows.size());
    out.symplectic_.reserve(rows.size());
    out.pivots_.reserve(rows.size());
    for (auto& r : rows) {
        out.pivots_.push_back(r.leading_bit());
        out.gens_.push_back(PauliOp::from_symplectic(r));
        out.symplectic_.push_back(std::move(r));
    }
    return out;
}

bool GroupBasis::contains(const PauliOp& p) const {
    if (p.qubits() != n_) throw DimensionMismatch("qubit count mismatch in contains");
    BitVector v = p.to_symplectic();
    for (std::size_t i = 0; i < symplectic_.size(); ++i)
        if (v.get(pivots_[i])) v ^= symplectic_[i];
    return v.is_zero();
}

GroupBasis centralizer(const GroupBasis& g) {
    const std::size_t n = g.qubits();
    // P commutes with a generator (gx,gz) iff [P.x|P.z] . [gz|gx] = 0, so the
    // centralizer is the kernel of the half-swapped generator matrix.
    BitMatrix constraints(g.dim(), 2 * n);
    for (std::size_t i = 0; i < g.dim(); ++i) {
        const PauliOp& gen = g.generators()[i];
        for (std::size_t q = 0; q < n; ++q) {
            if (gen.z.get(q)) constraints.set(i, q, true);
            if (gen.x.get(q)) constraints.set(i, n + q, true);
        }
    }
    auto basis = kernel_basis(constraints);
    std::vector<PauliOp> gens;
    gens.reserve(basis.size());
    for (const auto& v : basis) gens.push_back(PauliOp::from_symplectic(v));
    return GroupBasis::from_generators(n, gens);
}

GroupBasis intersect(const GroupBasis& g, const GroupBasis& h) {
    if (g.qubits() != h.qubits()) throw DimensionMismatch("qubit count mismatch in intersect");
    const std::size_t n = g.qubits();
    const std::size_t dg = g.dim(), dh = h.dim();
    if (dg == 0 || dh == 0) return GroupBasis(n);

    // Combinations (a|b) with sum_i a_i G_i + sum_j b_j H_j = 0; the G part
    // of each kernel vector spans the intersection.
    BitMatrix stacked(2 * n, dg + dh);
    for (std::size_t j = 0; j < dg + dh; ++j) {
        const PauliOp& gen = j < dg ? g.generators()[j] : h.generators()[j - dg];
        BitVector v = gen.to_symplectic();
        for (std::size_t r = 0; r < 2 * n; ++r)
            if (v.get(r)) stacked.set(r, j, true);
    }
    auto combos = kernel_basis(stacked);
    std::vector<PauliOp> elements;
    elements.reserve(combos.size());
    for (const auto& c : combos) {
        PauliOp p(n);
        for (std::size_t i = 0; i < dg; ++i)
            if (c.get(i)) p *= g.generators()[i];
        elements.push_back(std::move(p));
    }
    return GroupBasis::from_generators(n, elements);
}

}  // namespace gbs
