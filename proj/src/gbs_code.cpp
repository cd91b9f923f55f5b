#include "gbs/gbs_code.hpp"

#include <cassert>

namespace gbs {

GBSCode build_gbs(const BitMatrix& a) {
    if (a.weight() == 0) throw EmptyMatrix("matrix has no nonzero entries");
    const std::size_t rows = a.rows(), cols = a.cols();

    GBSCode out;
    out.matrix = a;
    out.cell_to_qubit.assign(rows * cols, npos);

    Layout layout;
    layout.grid_rows = rows;
    layout.grid_cols = cols;
    std::size_t next = 0;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (!a.get(r, c)) continue;
            out.cell_to_qubit[r * cols + c] = next++;
            layout.positions.push_back({static_cast<std::int64_t>(r),
                                        static_cast<std::int64_t>(c), 0});
        }
    }
    const std::size_t n = next;

    // Consecutive occupied pairs suffice: any same-row XX is a product of them.
    std::vector<PauliOp> gens;
    for (std::size_t r = 0; r < rows; ++r) {
        std::size_t prev = npos;
        for (std::size_t c = 0; c < cols; ++c) {
            if (!a.get(r, c)) continue;
            const std::size_t q = out.qubit_at(r, c);
            if (prev != npos)
                gens.push_back(PauliOp::single(n, prev, 'X') * PauliOp::single(n, q, 'X'));
            prev = q;
        }
    }
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t prev = npos;
        for (std::size_t r = 0; r < rows; ++r) {
            if (!a.get(r, c)) continue;
            const std::size_t q = out.qubit_at(r, c);
            if (prev != npos)
                gens.push_back(PauliOp::single(n, prev, 'Z') * PauliOp::single(n, q, 'Z'));
            prev = q;
        }
    }

    out.code = derive_code(n, std::move(gens), std::move(layout));
    return out;
}

TheoreticalParams theoretical_params(const BitMatrix& a, std::uint64_t cap) {
    if (a.weight() == 0) throw EmptyMatrix("matrix has no nonzero entries");
    TheoreticalParams p;
    p.n = a.weight();
    p.k = rank(a);
    std::vector<BitVector> rows(a.row_span().begin(), a.row_span().end());
    p.d_row = min_weight_nonzero(rows, cap).weight;
    const BitMatrix t = a.transposed();
    std::vector<BitVector> cols(t.row_span().begin(), t.row_span().end());
    p.d_col = min_weight_nonzero(cols, cap).weight;
    p.d = p.d_row < p.d_col ? p.d_row : p.d_col;
    return p;
}

PauliOp row_operator(const GBSCode& code, std::size_t i) {
    if (i >= code.matrix.rows()) throw IndexOutOfRange("row index out of range");
    PauliOp p(code.code.n);
    for (std::size_t c = 0; c < code.matrix.cols(); ++c)
        if (code.matrix.get(i, c)) p.z.set(code.qubit_at(i, c), true);
    return p;
}

PauliOp column_operator(const GBSCode& code, std::size_t j) {
    if (j >= code.matrix.cols()) throw IndexOutOfRange("column index out of range");
    PauliOp p(code.code.n);
    for (std::size_t r = 0; r < code.matrix.rows(); ++r)
        if (code.matrix.get(r, j)) p.x.set(code.qubit_at(r, j), true);
    return p;
}

std::vector<std::pair<PauliOp, PauliOp>> bare_logical_basis(const GBSCode& code) {
    const BitMatrix& a = code.matrix;
    const std::size_t mr = a.rows(), mc = a.cols();
    const std::size_t k = code.code.k;
    if (k == 0) throw NoLogicalQubits("no logical qubits");

    // Symplectic Gram-Schmidt on the bilinear form (z, x) -> z . (A x):
    // pair unit vectors greedily in index order, then clear the chosen pair
    // out of the remaining candidates.
    auto form = [&](const BitVector& z, const BitVector& x) { return z.dot(a.mul(x)); };

    std::vector<BitVector> z_cand, x_cand;
    for (std::size_t i = 0; i < mr; ++i) z_cand.push_back(BitVector::unit(mr, i));
    for (std::size_t j = 0; j < mc; ++j) x_cand.push_back(BitVector::unit(mc, j));

    std::vector<std::pair<BitVector, BitVector>> pairs;  // (x, z)
    std::size_t zi = 0;
    while (zi < z_cand.size()) {
        std::size_t xj = npos;
        for (std::size_t j = 0; j < x_cand.size(); ++j) {
            if (form(z_cand[zi], x_cand[j])) {
                xj = j;
                break;
            }
        }
        if (xj == npos) {
            ++zi;
            continue;
        }
        BitVector z0 = z_cand[zi], x0 = x_cand[xj];
        z_cand.erase(z_cand.begin() + static_cast<std::ptrdiff_t>(zi));
        x_cand.erase(x_cand.begin() + static_cast<std::ptrdiff_t>(xj));
        for (auto& z : z_cand)
            if (form(z, x0)) z ^= z0;
        for (auto& x : x_cand)
            if (form(z0, x)) x ^= x0;
        pairs.emplace_back(std::move(x0), std::move(z0));
    }
    assert(pairs.size() == k);

    std::vector<std::pair<PauliOp, PauliOp>> out;
    out.reserve(k);
    for (const auto& [x, z] : pairs) {
        PauliOp px(code.code.n), pz(code.code.n);
        for (std::size_t r = 0; r < mr; ++r) {
            for (std::size_t c = 0; c < mc; ++c) {
                if (!a.get(r, c)) continue;
                if (x.get(c)) px.x.set(code.qubit_at(r, c), true);
                if (z.get(r)) pz.z.set(code.qubit_at(r, c), true);
            }
        }
        out.emplace_back(std::move(px), std::move(pz));
    }
    return out;
}

}  // namespace gbs
