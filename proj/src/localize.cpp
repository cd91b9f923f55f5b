#include "gbs/localize.hpp"

#include <algorithm>
#include <cassert>

namespace gbs {

SubsystemCode extend_with_ancilla(const SubsystemCode& code, std::size_t q) {
    if (q >= code.n) throw IndexOutOfRange("ancilla attachment qubit out of range");
    const std::size_t n2 = code.n + 1;
    std::vector<PauliOp> gens;
    gens.reserve(code.gauge_generators.size() + 2);
    for (const auto& g : code.gauge_generators) gens.push_back(g.extended(n2));
    const std::size_t a = code.n;
    gens.push_back(PauliOp::single(n2, q, 'X') * PauliOp::single(n2, a, 'X'));
    gens.push_back(PauliOp::single(n2, a, 'Z'));
    return derive_code(n2, std::move(gens));
}

LocalCode localize(const GBSCode& gbs) {
    const BitMatrix& a = gbs.matrix;
    if (a.weight() == 0) throw EmptyMatrix("matrix has no nonzero entries");
    const std::size_t rows = a.rows(), cols = a.cols();
    const std::size_t n0 = a.weight();

    Layout layout;
    layout.grid_rows = rows;
    layout.grid_cols = cols;
    layout.positions = gbs.code.layout->positions;

    std::vector<AncillaRecord> ancillas;
    std::size_t next = n0;
    auto add_ancilla = [&](std::size_t r, std::size_t c, int layer, AncillaKind kind) {
        CellPos pos{static_cast<std::int64_t>(r), static_cast<std::int64_t>(c), layer};
        layout.positions.push_back(pos);
        ancillas.push_back({next, pos, kind});
        return next++;
    };

    std::vector<std::size_t> x_anc, z_anc;  // ancillas needing one-qubit Z resp. X
    std::vector<std::pair<std::size_t, std::size_t>> x_pairs, z_pairs;

    // Row chains: walk left to right, dropping an ancilla on every empty
    // cell between consecutive occupied cells.
    for (std::size_t r = 0; r < rows; ++r) {
        std::size_t prev_c = npos;
        for (std::size_t c = 0; c < cols; ++c) {
            if (!a.get(r, c)) continue;
            if (prev_c != npos) {
                std::size_t chain_prev = gbs.qubit_at(r, prev_c);
                for (std::size_t cc = prev_c + 1; cc < c; ++cc) {
                    const std::size_t anc = add_ancilla(r, cc, 0, AncillaKind::x_chain);
                    x_anc.push_back(anc);
                    x_pairs.emplace_back(chain_prev, anc);
                    chain_prev = anc;
                }
                x_pairs.emplace_back(chain_prev, gbs.qubit_at(r, c));
            }
            prev_c = c;
        }
    }
    // Column chains, top to bottom, ancillas on layer 1.
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t prev_r = npos;
        for (std::size_t r = 0; r < rows; ++r) {
            if (!a.get(r, c)) continue;
            if (prev_r != npos) {
                std::size_t chain_prev = gbs.qubit_at(prev_r, c);
                for (std::size_t rr = prev_r + 1; rr < r; ++rr) {
                    const std::size_t anc = add_ancilla(rr, c, 1, AncillaKind::z_chain);
                    z_anc.push_back(anc);
                    z_pairs.emplace_back(chain_prev, anc);
                    chain_prev = anc;
                }
                z_pairs.emplace_back(chain_prev, gbs.qubit_at(r, c));
            }
            prev_r = r;
        }
    }

    const std::size_t n = next;
    std::vector<PauliOp> gens;
    gens.reserve(x_pairs.size() + x_anc.size() + z_pairs.size() + z_anc.size());
    for (auto [p, q] : x_pairs)
        gens.push_back(PauliOp::single(n, p, 'X') * PauliOp::single(n, q, 'X'));
    for (std::size_t q : x_anc) gens.push_back(PauliOp::single(n, q, 'Z'));
    for (auto [p, q] : z_pairs)
        gens.push_back(PauliOp::single(n, p, 'Z') * PauliOp::single(n, q, 'Z'));
    for (std::size_t q : z_anc) gens.push_back(PauliOp::single(n, q, 'X'));

    LocalCode out;
    out.source_matrix = a;
    out.ancillas = std::move(ancillas);
    out.code = derive_code(n, std::move(gens), std::move(layout));
    return out;
}

bool check_locality(const SubsystemCode& code) {
    if (!code.layout) throw MissingLayout("locality check needs a layout");
    const Layout& layout = *code.layout;
    for (const auto& gen : code.gauge_generators) {
        std::vector<std::size_t> support;
        for (std::size_t q = 0; q < code.n; ++q)
            if (gen.x.get(q) || gen.z.get(q)) support.push_back(q);
        if (support.size() <= 1) continue;
        if (support.size() > 2) return false;
        const std::size_t q0 = support[0], q1 = support[1];
        const bool xx = gen.x.get(q0) && !gen.z.get(q0) && gen.x.get(q1) && !gen.z.get(q1);
        const bool zz = !gen.x.get(q0) && gen.z.get(q0) && !gen.x.get(q1) && gen.z.get(q1);
        const CellPos& p0 = layout.position(q0);
        const CellPos& p1 = layout.position(q1);
        if (xx) {
            if (p0.row != p1.row || std::llabs(p0.col - p1.col) > 1) return false;
        } else if (zz) {
            if (p0.col != p1.col || std::llabs(p0.row - p1.row) > 1) return false;
        } else {
            return false;
        }
    }
    return true;
}

bool check_locality(const LocalCode& local) { return check_locality(local.code); }

LocalCode pad_to(const LocalCode& local, std::size_t target) {
    const SubsystemCode& code = local.code;
    if (target < code.n) throw TargetTooSmall("pad target below current qubit count");
    const Layout& layout = *code.layout;
    const std::size_t capacity = 2 * layout.grid_rows * layout.grid_cols;
    if (target > capacity) throw NoSlots("pad target exceeds two qubits per cell");

    LocalCode out;
    out.source_matrix = local.source_matrix;
    out.ancillas = local.ancillas;

    Layout new_layout = layout;
    std::vector<PauliOp> gens;
    gens.reserve(code.gauge_generators.size() + 2 * (target - code.n));
    for (const auto& g : code.gauge_generators) gens.push_back(g.extended(target));

    std::size_t next = code.n;
    for (std::size_t r = 0; r < layout.grid_rows && next < target; ++r) {
        for (std::size_t c = 0; c < layout.grid_cols && next < target; ++c) {
            for (int layer = 0; layer < 2 && next < target; ++layer) {
                CellPos pos{static_cast<std::int64_t>(r), static_cast<std::int64_t>(c), layer};
                if (layout.qubit_at(pos)) continue;
                new_layout.positions.push_back(pos);
                out.ancillas.push_back({next, pos, AncillaKind::padding});
                gens.push_back(PauliOp::single(target, next, 'X'));
                gens.push_back(PauliOp::single(target, next, 'Z'));
                ++next;
            }
        }
    }
    assert(next == target);
    out.code = derive_code(target, std::move(gens), std::move(new_layout));
    return out;
}

}  // namespace gbs
