#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gbs/gbs_code.hpp"
#include "gbs/subsystem.hpp"
#include "helpers.hpp"

using namespace gbs;
using namespace gbs::testing;

TEST_CASE("derive on small gauge groups") {
    // abelian gauge group: an ordinary stabilizer code
    auto zz = derive_code(2, {PauliOp::parse("Z0 Z1", 2)});
    CHECK(zz.k == 1);
    CHECK(zz.g == 0);
    CHECK(zz.stabilizer.dim() == 1);

    auto example = build_gbs(BitMatrix::from_strings({"110", "011", "101"})).code;
    CHECK(example.n == 6);
    CHECK(example.gauge.dim() == 6);
    CHECK(example.stabilizer.dim() == 2);
    CHECK(example.k == 2);
    CHECK(example.g == 2);

    auto pure_gauge = derive_code(1, {PauliOp::single(1, 0, 'X'), PauliOp::single(1, 0, 'Z')});
    CHECK(pure_gauge.k == 0);
    CHECK(pure_gauge.g == 1);
    CHECK(pure_gauge.stabilizer.dim() == 0);
}

TEST_CASE("qubit count bookkeeping holds on random codes") {
    Xoshiro256 rng(20);
    for (int trial = 0; trial < 300; ++trial) {
        auto code = random_gauge_code(1 + rng.below(7), rng);
        CHECK(code.n == code.stabilizer.dim() + code.k + code.g);
    }
}

TEST_CASE("dressed logical predicate") {
    auto code = derive_code(2, {PauliOp::parse("Z0 Z1", 2)});
    CHECK_FALSE(is_dressed_logical(code, code.gauge_generators[0]));
    CHECK(is_dressed_logical(code, PauliOp::single(2, 0, 'Z')));
    CHECK_FALSE(is_dressed_logical(code, PauliOp(2)));
}

TEST_CASE("full distance on worked examples") {
    auto zz = derive_code(2, {PauliOp::parse("Z0 Z1", 2)});
    auto r = distance_full(zz);
    CHECK(r.value == 1);
    CHECK(r.certified_lower_bound == 0);
    CHECK(r.witness == PauliOp::single(2, 0, 'Z'));

    CHECK(distance_full(build_gbs(BitMatrix::ones(2, 2)).code).value == 2);
    CHECK(distance_full(build_gbs(BitMatrix::from_strings({"110", "011", "101"})).code).value == 2);
}

TEST_CASE("distance errors") {
    auto pure_gauge = derive_code(1, {PauliOp::single(1, 0, 'X'), PauliOp::single(1, 0, 'Z')});
    CHECK_THROWS_AS(distance_full(pure_gauge), NoLogicalQubits);
    CHECK_THROWS_AS(distance_bounded(pure_gauge, 3), NoLogicalQubits);

    auto big = build_gbs(BitMatrix::ones(3, 3)).code;
    CHECK_THROWS_AS(distance_full(big, /*cap=*/16), CapExceeded);
}

TEST_CASE("bounded distance") {
    auto zz = derive_code(2, {PauliOp::parse("Z0 Z1", 2)});
    auto r0 = distance_bounded(zz, 0);
    CHECK_FALSE(r0.value.has_value());
    CHECK(r0.certified_lower_bound == 0);
    CHECK_FALSE(r0.witness.has_value());

    auto r1 = distance_bounded(zz, 1);
    CHECK(r1.value == 1);
    CHECK(r1.witness == PauliOp::single(2, 0, 'Z'));

    auto bacon33 = build_gbs(BitMatrix::ones(3, 3)).code;
    auto r2 = distance_bounded(bacon33, 2);
    CHECK_FALSE(r2.value.has_value());
    CHECK(r2.certified_lower_bound == 2);
    auto r3 = distance_bounded(bacon33, 3);
    CHECK(r3.value == 3);
}

TEST_CASE("both oracles agree on random codes") {
    Xoshiro256 rng(21);
    int compared = 0;
    while (compared < 120) {
        auto code = random_gauge_code(1 + rng.below(6), rng);
        if (code.k == 0) continue;
        auto full = distance_full(code);
        auto bounded = distance_bounded(code, code.n);
        CHECK(full.value == bounded.value);
        CHECK(is_dressed_logical(code, *full.witness));
        CHECK(is_dressed_logical(code, *bounded.witness));
        CHECK(full.witness->weight() == *full.value);
        ++compared;
    }
}

TEST_CASE("stabilizer codes agree with the direct all-Pauli oracle") {
    Xoshiro256 rng(22);
    int compared = 0;
    while (compared < 40) {
        const std::size_t n = 2 + rng.below(4);  // up to 5 qubits
        // grow a random abelian group
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
        if (code.k == 0) continue;
        REQUIRE(code.g == 0);  // abelian gauge group
        const std::size_t direct = direct_distance(code);
        CHECK(distance_full(code).value == direct);
        CHECK(distance_bounded(code, n).value == direct);
        ++compared;
    }
}
