#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gbs/bitvec.hpp"

namespace gbs {

/// Phaseless n-qubit Pauli operator as a symplectic pair of bit vectors.
/// Qubit q carries X iff x_q=1,z_q=0; Z iff x_q=0,z_q=1; Y iff both.
/// Overall phase factors are never tracked: products are plain xors, and
/// the group is the 2n-dimensional binary space.
struct PauliOp {
    BitVector x, z;

    PauliOp() = default;
    explicit PauliOp(std::size_t n) : x(n), z(n) {}
    PauliOp(BitVector x_part, BitVector z_part);

    static PauliOp single(std::size_t n, std::size_t q, char letter);
    /// Parse "X0 Z3 Y5" (or "I" for the identity); qubit indices zero-based.
    static PauliOp parse(std::string_view s, std::size_t n);

    std::size_t qubits() const { return x.size(); }
    /// Number of qubits acted on non-trivially.
    std::size_t weight() const;
    bool is_identity() const { return x.is_zero() && z.is_zero(); }

    PauliOp& operator*=(const PauliOp& o) {
        x ^= o.x;
        z ^= o.z;
        return *this;
    }
    friend PauliOp operator*(PauliOp a, const PauliOp& b) {
        a *= b;
        return a;
    }

    PauliOp extended(std::size_t new_n) const { return {x.extended(new_n), z.extended(new_n)}; }

    /// Concatenated [x|z] vector of length 2n.
    BitVector to_symplectic() const;
    static PauliOp from_symplectic(const BitVector& v);

    bool operator==(const PauliOp&) const = default;

    std::string to_string() const;
};

/// 0 iff the operators commute; equals <p.x,q.z> + <p.z,q.x> mod 2.
int symplectic_product(const PauliOp& p, const PauliOp& q);

/// Independent generating set of a Pauli subgroup in canonical form: the
/// generators' [x|z] vectors are in reduced row echelon form with all X
/// coordinates ordered before all Z coordinates. Two GroupBasis objects
/// describe the same subgroup iff they compare equal.
class GroupBasis {
public:
    GroupBasis() = default;
    explicit GroupBasis(std::size_t n) : n_(n) {}

    static GroupBasis from_generators(std::size_t n, std::span<const PauliOp> gens);
    static GroupBasis from_generators(std::size_t n, std::initializer_list<PauliOp> gens) {
        return from_generators(n, std::span<const PauliOp>(gens.begin(), gens.size()));
    }

    std::size_t qubits() const { return n_; }
    std::size_t dim() const { return gens_.size(); }
    std::span<const PauliOp> generators() const { return gens_; }

    bool contains(const PauliOp& p) const;

    bool operator==(const GroupBasis& o) const { return n_ == o.n_ && gens_ == o.gens_; }

private:
    std::size_t n_ = 0;
    std::vector<PauliOp> gens_;
    std::vector<BitVector> symplectic_;  // cached [x|z] rows of gens_
    std::vector<std::size_t> pivots_;
};

/// All phaseless Paulis commuting with every element of g;
/// dim centralizer(g) = 2n - dim g.
GroupBasis centralizer(const GroupBasis& g);

/// Canonical basis of the intersection subgroup.
GroupBasis intersect(const GroupBasis& g, const GroupBasis& h);

}  // namespace gbs
