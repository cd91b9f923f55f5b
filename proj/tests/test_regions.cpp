#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gbs/gbs_code.hpp"
#include "gbs/localize.hpp"
#include "gbs/regions.hpp"
#include "helpers.hpp"

using namespace gbs;
using namespace gbs::testing;

namespace {

const BitMatrix kExample = BitMatrix::from_strings({"110", "011", "101"});

Region random_region(std::size_t n, Xoshiro256& rng) {
    Region m(n);
    for (std::size_t q = 0; q < n; ++q)
        if (rng.next_bit()) m.add(q);
    return m;
}

}  // namespace

TEST_CASE("region basics") {
    Region m = Region::of(5, {0, 2});
    CHECK(m.count() == 2);
    CHECK(m.contains(2));
    CHECK_FALSE(m.contains(1));
    CHECK(m.complement().indices() == std::vector<std::size_t>{1, 3, 4});
    CHECK(Region::all(3).count() == 3);
    CHECK_THROWS_AS(Region::of(2, {5}), IndexOutOfRange);
}

TEST_CASE("group restriction on fixed cases") {
    auto bacon = build_gbs(BitMatrix::ones(2, 2)).code;
    // top row: the row XX generator survives whole, the column ZZ
    // generators restrict to single-Z operators
    Region top = Region::of(4, {0, 1});
    auto restricted = restrict_group(bacon.gauge, top);
    CHECK(restricted.contains(PauliOp::parse("X0 X1", 4)));
    CHECK(restricted.contains(PauliOp::single(4, 0, 'Z')));
    CHECK(restricted.contains(PauliOp::single(4, 1, 'Z')));

    CHECK(restrict_group(bacon.gauge, Region::all(4)) == bacon.gauge);
    CHECK(restrict_group(bacon.gauge, Region(4)).dim() == 0);
}

TEST_CASE("restriction equals the definitional set on tiny groups") {
    Xoshiro256 rng(50);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng.below(4);
        std::vector<PauliOp> gens;
        for (std::size_t i = 0; i < 1 + rng.below(n + 2); ++i) gens.push_back(random_pauli(n, rng));
        auto g = GroupBasis::from_generators(n, gens);
        Region m = random_region(n, rng);

        auto restricted = restrict_group(g, m);
        // definition: projections of all group elements
        std::vector<BitVector> projected;
        for (const auto& p : enumerate_group(g)) {
            PauliOp cut(n);
            for (std::size_t q = 0; q < n; ++q) {
                if (!m.contains(q)) continue;
                if (p.x.get(q)) cut.x.set(q, true);
                if (p.z.get(q)) cut.z.set(q, true);
            }
            projected.push_back(cut.to_symplectic());
        }
        auto canonical = row_reduce(std::move(projected));
        CHECK(canonical.size() == restricted.dim());
        for (const auto& v : canonical) CHECK(restricted.contains(PauliOp::from_symplectic(v)));
    }
}

TEST_CASE("supported subgroup") {
    auto pair = GroupBasis::from_generators(2, {PauliOp::parse("X0 X1", 2)});
    CHECK(supported_subgroup(pair, Region::of(2, {0})).dim() == 0);
    CHECK(supported_subgroup(pair, Region::all(2)) == pair);

    Xoshiro256 rng(51);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng.below(5);
        std::vector<PauliOp> gens;
        for (std::size_t i = 0; i < 1 + rng.below(n + 2); ++i) gens.push_back(random_pauli(n, rng));
        auto g = GroupBasis::from_generators(n, gens);
        Region m = random_region(n, rng);
        auto inner = supported_subgroup(g, m);
        auto outer = restrict_group(g, m);
        for (const auto& p : inner.generators()) {
            CHECK(g.contains(p));
            CHECK(outer.contains(p));
            for (std::size_t q = 0; q < n; ++q)
                if (!m.contains(q)) CHECK((!p.x.get(q) && !p.z.get(q)));
        }
    }
}

TEST_CASE("logical operator counts on fixed regions") {
    auto example = build_gbs(kExample).code;
    CHECK(dressed_logical_dim(example, Region(6)) == 0);
    CHECK(dressed_logical_dim(example, Region::all(6)) == 2 * example.k);
    CHECK(bare_logical_dim(example, Region(6)) == 0);
    CHECK(bare_logical_dim(example, Region::all(6)) == 2 * example.k);
    // distance 2: no single qubit supports a dressed logical
    for (std::size_t q = 0; q < 6; ++q)
        CHECK(dressed_logical_dim(example, Region::of(6, {q})) == 0);

    // single-qubit dressed logicals exist exactly where d = 1
    auto zz = derive_code(2, {PauliOp::parse("Z0 Z1", 2)});
    CHECK(dressed_logical_dim(zz, Region::of(2, {0})) == 1);
}

TEST_CASE("bare logicals never outnumber dressed ones") {
    Xoshiro256 rng(52);
    for (int trial = 0; trial < 150; ++trial) {
        auto code = random_gauge_code(1 + rng.below(6), rng);
        Region m = random_region(code.n, rng);
        CHECK(bare_logical_dim(code, m) <= dressed_logical_dim(code, m));
    }
}

TEST_CASE("cleaning identity, exhaustive on the worked example") {
    auto example = build_gbs(kExample).code;
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        Region m(6);
        for (std::size_t q = 0; q < 6; ++q)
            if ((mask >> q) & 1u) m.add(q);
        CHECK(bare_logical_dim(example, m) + dressed_logical_dim(example, m.complement()) ==
              2 * example.k);
        CHECK(cleaning_identity_holds(example, m));
    }
}

TEST_CASE("cleaning identity on random codes") {
    Xoshiro256 rng(53);
    for (int trial = 0; trial < 200; ++trial) {
        auto code = random_gauge_code(1 + rng.below(6), rng);
        CHECK(cleaning_identity_holds(code, random_region(code.n, rng)));
    }
}

TEST_CASE("stabilizer-code specialization of the cleaning identity") {
    Xoshiro256 rng(54);
    int done = 0;
    while (done < 60) {
        const std::size_t n = 2 + rng.below(4);
        std::vector<PauliOp> gens;
        for (int attempt = 0; attempt < 20 && gens.size() + 1 < n; ++attempt) {
            PauliOp p = random_pauli(n, rng);
            if (p.is_identity()) continue;
            bool ok = true;
            for (const auto& g : gens)
                if (symplectic_product(p, g)) {
                    ok = false;
                    break;
                }
            if (ok) gens.push_back(std::move(p));
        }
        if (gens.empty()) continue;
        auto code = derive_code(n, gens);
        if (code.g != 0) continue;
        Region m = random_region(n, rng);
        CHECK(dressed_logical_dim(code, m) + dressed_logical_dim(code, m.complement()) ==
              2 * code.k);
        ++done;
    }
}

TEST_CASE("boundary region") {
    auto local = localize(build_gbs(BitMatrix::ones(3, 3)));
    const Layout& layout = *local.code.layout;
    CHECK(boundary_region(layout, Region::all(9), 1).count() == 0);

    // center qubit of the 3x3 block: everything else is within range 1
    Region center = Region::of(9, {4});
    CHECK(boundary_region(layout, center, 1).count() == 8);

    // range 0 catches only co-located qubits on the other layer
    auto padded = pad_to(local, 18);
    Region first(18);
    first.add(0);
    Region b0 = boundary_region(*padded.code.layout, first, 0);
    REQUIRE(b0.count() == 1);
    const CellPos& other = padded.code.layout->position(b0.indices()[0]);
    CHECK(other.row == 0);
    CHECK(other.col == 0);
    CHECK(other.layer == 1);
}

TEST_CASE("restriction bound on fixed and random instances") {
    auto bacon = build_gbs(BitMatrix::ones(2, 2)).code;
    auto whole = restriction_check(bacon, Region::all(4), 1);
    CHECK(whole.conclusive);
    CHECK(whole.holds);
    CHECK(whole.boundary_size == 0);
    CHECK(whole.restricted_distance == whole.distance);

    auto column = restriction_check(bacon, Region::of(4, {0, 2}), 1);
    CHECK(column.conclusive);
    CHECK(column.holds);

    Xoshiro256 rng(55);
    for (int trial = 0; trial < 60; ++trial) {
        BitMatrix a = random_bitmatrix(1 + rng.below(3), 1 + rng.below(3), rng);
        if (a.weight() == 0) continue;
        auto code = build_gbs(a).code;
        auto report = restriction_check(code, random_region(code.n, rng), 1);
        CHECK(report.conclusive);
        CHECK(report.holds);
    }
}

TEST_CASE("witness acting trivially on a region") {
    // dim g = 2n: any proper region must leave something untouched
    std::vector<PauliOp> full;
    for (std::size_t q = 0; q < 3; ++q) {
        full.push_back(PauliOp::single(3, q, 'X'));
        full.push_back(PauliOp::single(3, q, 'Z'));
    }
    auto g = GroupBasis::from_generators(3, full);
    auto w = trivial_action_witness(g, Region(3));
    REQUIRE(w.has_value());
    CHECK_FALSE(w->is_identity());

    auto tiny = GroupBasis::from_generators(1, {PauliOp::single(1, 0, 'X')});
    CHECK_FALSE(trivial_action_witness(tiny, Region::of(1, {0})).has_value());

    Xoshiro256 rng(56);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 3 + rng.below(4);
        std::vector<PauliOp> gens;
        for (std::size_t i = 0; i < 5; ++i) gens.push_back(random_pauli(n, rng));
        auto group = GroupBasis::from_generators(n, gens);
        Region m = Region::of(n, {0, 1});
        auto witness = trivial_action_witness(group, m);
        if (2 * m.count() < group.dim()) REQUIRE(witness.has_value());
        if (witness) {
            CHECK_FALSE(witness->is_identity());
            CHECK(group.contains(*witness));
            CHECK((!witness->x.get(0) && !witness->z.get(0)));
            CHECK((!witness->x.get(1) && !witness->z.get(1)));
        }
    }
}
