#include "gbs/subsystem.hpp"

#include <bit>
#include <cassert>
#include <limits>
#include <string>

namespace gbs {

SubsystemCode derive_code(std::size_t n, std::vector<PauliOp> gauge_generators,
                          std::optional<Layout> layout) {
    for (const auto& g : gauge_generators)
        if (g.qubits() != n) throw DimensionMismatch("gauge generator qubit count mismatch");
    if (layout && layout->size() != n) throw MissingLayout("layout does not cover all qubits");

    SubsystemCode code;
    code.n = n;
    code.gauge_generators = std::move(gauge_generators);
    code.gauge = GroupBasis::from_generators(n, code.gauge_generators);
    GroupBasis central = centralizer(code.gauge);
    code.stabilizer = intersect(code.gauge, central);

    const std::size_t dim_g = code.gauge.dim();
    const std::size_t dim_s = code.stabilizer.dim();
    const std::size_t dim_c = central.dim();
    assert(dim_c + dim_g == 2 * n);
    assert(dim_g >= dim_s && (dim_g - dim_s) % 2 == 0);
    assert(dim_c >= dim_s && (dim_c - dim_s) % 2 == 0);
    code.g = (dim_g - dim_s) / 2;
    code.k = (dim_c - dim_s) / 2;
    assert(code.n == dim_s + code.k + code.g);
    code.layout = std::move(layout);
    return code;
}

bool is_dressed_logical(const SubsystemCode& code, const PauliOp& p) {
    if (p.qubits() != code.n) throw DimensionMismatch("qubit count mismatch");
    for (const auto& s : code.stabilizer.generators())
        if (symplectic_product(p, s)) return false;
    return !code.gauge.contains(p);
}

DistanceResult distance_full(const SubsystemCode& code, std::uint64_t cap) {
    if (code.k == 0) throw NoLogicalQubits("distance is undefined for codes with k = 0");
    GroupBasis cs = centralizer(code.stabilizer);
    const std::size_t b = cs.dim();
    if (b >= 63 || (std::uint64_t(1) << b) > cap)
        throw CapExceeded("distance sweep over 2^" + std::to_string(b) +
                          " centralizer elements exceeds cap");

    const auto& ops = kernels::active();
    PauliOp cur(code.n);
    const std::size_t nwords = cur.x.word_count();
    std::size_t best = std::numeric_limits<std::size_t>::max();
    PauliOp witness;

    const std::uint64_t total = std::uint64_t(1) << b;
    for (std::uint64_t t = 1; t < total; ++t) {
        const PauliOp& gen = cs.generators()[std::countr_zero(t)];
        const std::size_t w = ops.pauli_xor_weight(cur.x.word_data(), gen.x.word_data(),
                                                   cur.z.word_data(), gen.z.word_data(), nwords);
        // Gauge membership is the expensive step; only pay for improvements.
        if (w < best && !code.gauge.contains(cur)) {
            best = w;
            witness = cur;
            if (best == 1) break;
        }
    }
    assert(best != std::numeric_limits<std::size_t>::max());
    DistanceResult r;
    r.mode = DistanceMode::full;
    r.value = best;
    r.certified_lower_bound = best - 1;
    r.witness = std::move(witness);
    return r;
}

namespace {

// w-subsets of 0..n-1 in colexicographic order.
class ColexCombinations {
public:
    ColexCombinations(std::size_t n, std::size_t w) : n_(n), state_(w) {
        for (std::size_t i = 0; i < w; ++i) state_[i] = i;
        done_ = w > n;
    }

    bool done() const { return done_; }
    const std::vector<std::size_t>& current() const { return state_; }

    void advance() {
        const std::size_t w = state_.size();
        if (w == 0) {
            done_ = true;
            return;
        }
        for (std::size_t i = 0; i < w; ++i) {
            const std::size_t limit = (i + 1 < w) ? state_[i + 1] : n_;
            if (state_[i] + 1 < limit) {
                ++state_[i];
                for (std::size_t j = 0; j < i; ++j) state_[j] = j;
                return;
            }
        }
        done_ = true;
    }

private:
    std::size_t n_;
    std::vector<std::size_t> state_;
    bool done_ = false;
};

}  // namespace

DistanceResult distance_bounded(const SubsystemCode& code, std::size_t w_max) {
    if (code.k == 0) throw NoLogicalQubits("distance is undefined for codes with k = 0");

    const auto stabilizer_gens = code.stabilizer.generators();
    // letters[i]: 0 = X, 1 = Z, 2 = Y at support position i (position 0 advances fastest)
    static constexpr bool kXBit[3] = {true, false, true};
    static constexpr bool kZBit[3] = {false, true, true};

    DistanceResult r;
    r.mode = DistanceMode::bounded;
    const std::size_t w_top = w_max < code.n ? w_max : code.n;
    for (std::size_t w = 1; w <= w_top; ++w) {
        std::vector<int> letters(w, 0);
        for (ColexCombinations comb(code.n, w); !comb.done(); comb.advance()) {
            const auto& support = comb.current();
            std::fill(letters.begin(), letters.end(), 0);
            while (true) {
                PauliOp p(code.n);
                for (std::size_t i = 0; i < w; ++i) {
                    p.x.set(support[i], kXBit[letters[i]]);
                    p.z.set(support[i], kZBit[letters[i]]);
                }
                bool commutes = true;
                for (const auto& s : stabilizer_gens) {
                    if (symplectic_product(p, s)) {
                        commutes = false;
                        break;
                    }
                }
                if (commutes && !code.gauge.contains(p)) {
                    r.value = w;
                    r.certified_lower_bound = w - 1;
                    r.witness = std::move(p);
                    return r;
                }
                std::size_t i = 0;
                while (i < w && letters[i] == 2) letters[i++] = 0;
                if (i == w) break;
                ++letters[i];
            }
        }
    }
    r.certified_lower_bound = w_max;
    return r;
}

}  // namespace gbs
