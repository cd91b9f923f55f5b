#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "gbs/localize.hpp"
#include "helpers.hpp"

using namespace gbs;
using namespace gbs::testing;

namespace {
const BitMatrix kExample = BitMatrix::from_strings({"110", "011", "101"});
}

TEST_CASE("ancilla extension on fixed codes") {
    auto zz = derive_code(2, {PauliOp::parse("Z0 Z1", 2)});
    auto ext = extend_with_ancilla(zz, 0);
    CHECK(ext.n == 3);
    CHECK(ext.k == 1);
    CHECK(ext.gauge.dim() == zz.gauge.dim() + 2);
    CHECK(distance_full(ext).value == distance_full(zz).value);

    auto bacon = build_gbs(BitMatrix::ones(2, 2)).code;
    auto bacon_ext = extend_with_ancilla(bacon, 3);
    CHECK(bacon_ext.k == 1);
    CHECK(distance_full(bacon_ext).value == 2);

    CHECK_THROWS_AS(extend_with_ancilla(zz, 2), IndexOutOfRange);
}

TEST_CASE("ancilla extension preserves k and distance on random codes") {
    Xoshiro256 rng(40);
    int trials = 0;
    while (trials < 80) {
        auto code = random_gauge_code(1 + rng.below(5), rng);
        const std::size_t d = code.k ? *distance_full(code).value : 0;
        for (std::size_t q = 0; q < code.n; ++q) {
            auto ext = extend_with_ancilla(code, q);
            CHECK(ext.k == code.k);
            CHECK(ext.gauge.dim() == code.gauge.dim() + 2);
            if (code.k) CHECK(*distance_full(ext).value == d);
        }
        ++trials;
    }
}

TEST_CASE("localize fills gaps between consecutive occupied cells") {
    // no gaps: nothing changes
    auto full = localize(build_gbs(BitMatrix::ones(3, 3)));
    CHECK(full.ancillas.empty());
    CHECK(full.code.n == 9);
    CHECK(full.code.gauge_generators.size() == 12);

    // one row gap
    auto row = localize(build_gbs(BitMatrix::from_strings({"101"})));
    CHECK(row.code.n == 3);
    REQUIRE(row.ancillas.size() == 1);
    CHECK(row.ancillas[0].pos == CellPos{0, 1, 0});
    CHECK(row.ancillas[0].kind == AncillaKind::x_chain);
    REQUIRE(row.code.gauge_generators.size() == 3);
    CHECK(row.code.gauge_generators[0].to_string() == "X0 X2");
    CHECK(row.code.gauge_generators[1].to_string() == "X1 X2");
    CHECK(row.code.gauge_generators[2].to_string() == "Z2");
    CHECK(row.code.k == 1);
    CHECK(distance_full(row.code).value == 1);

    // worked 3x3 example: one row gap at (2,1), one column gap at (1,0)
    auto ex = localize(build_gbs(kExample));
    CHECK(ex.code.n == 8);
    REQUIRE(ex.ancillas.size() == 2);
    CHECK(ex.ancillas[0].pos == CellPos{2, 1, 0});
    CHECK(ex.ancillas[0].kind == AncillaKind::x_chain);
    CHECK(ex.ancillas[1].pos == CellPos{1, 0, 1});
    CHECK(ex.ancillas[1].kind == AncillaKind::z_chain);
    CHECK(ex.code.k == 2);
    CHECK(distance_full(ex.code).value == 2);
}

TEST_CASE("locality predicate") {
    CHECK(check_locality(localize(build_gbs(kExample))));
    CHECK(check_locality(localize(build_gbs(BitMatrix::from_strings({"101"})))));

    // raw long-range generator
    CHECK_FALSE(check_locality(build_gbs(BitMatrix::from_strings({"101"})).code));

    // mixed-letter two-qubit generator on adjacent cells
    Layout layout;
    layout.grid_rows = 1;
    layout.grid_cols = 2;
    layout.positions = {{0, 0, 0}, {0, 1, 0}};
    auto mixed = derive_code(2, {PauliOp::parse("X0 Z1", 2)}, layout);
    CHECK_FALSE(check_locality(mixed));

    auto no_layout = derive_code(2, {PauliOp::parse("X0 X1", 2)});
    CHECK_THROWS_AS(check_locality(no_layout), MissingLayout);
}

TEST_CASE("localize output stays local on random matrices") {
    Xoshiro256 rng(41);
    for (int trial = 0; trial < 120; ++trial) {
        BitMatrix a = random_bitmatrix(1 + rng.below(6), 1 + rng.below(6), rng);
        if (a.weight() == 0) continue;
        auto local = localize(build_gbs(a));
        CHECK(check_locality(local));
        CHECK(local.code.k == rank(a));

        // gap accounting: ancillas = row-gap cells + column-gap cells
        std::size_t gaps = 0;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            std::size_t prev = npos;
            for (std::size_t c = 0; c < a.cols(); ++c)
                if (a.get(r, c)) {
                    if (prev != npos) gaps += c - prev - 1;
                    prev = c;
                }
        }
        for (std::size_t c = 0; c < a.cols(); ++c) {
            std::size_t prev = npos;
            for (std::size_t r = 0; r < a.rows(); ++r)
                if (a.get(r, c)) {
                    if (prev != npos) gaps += r - prev - 1;
                    prev = r;
                }
        }
        CHECK(local.ancillas.size() == gaps);
        CHECK(local.code.n <= 2 * a.rows() * a.cols());
    }
}

TEST_CASE("padding to a target qubit count") {
    auto local = localize(build_gbs(BitMatrix::ones(3, 3)));
    auto padded = pad_to(local, 18);
    CHECK(padded.code.n == 18);
    CHECK(padded.code.k == 1);
    CHECK(check_locality(padded));
    CHECK(padded.code.layout->positions.size() == 18);
    auto d = distance_bounded(padded.code, 3);
    CHECK(d.value == 3);

    // padding to the current size is the identity transform
    auto same = pad_to(local, local.code.n);
    CHECK(same.code.n == local.code.n);
    CHECK(same.code.gauge_generators.size() == local.code.gauge_generators.size());

    // each padded qubit adds two gauge dimensions and no logical qubits
    auto one_more = pad_to(local, local.code.n + 1);
    CHECK(one_more.code.gauge.dim() == local.code.gauge.dim() + 2);
    CHECK(one_more.code.k == local.code.k);

    CHECK_THROWS_AS(pad_to(local, 8), TargetTooSmall);
    CHECK_THROWS_AS(pad_to(local, 19), NoSlots);
}

TEST_CASE("localize + pad reproduce the matrix parameters end to end") {
    auto check_end_to_end = [](const BitMatrix& a) {
        auto params = theoretical_params(a);
        auto padded = pad_to(localize(build_gbs(a)), 2 * a.rows() * a.cols());
        REQUIRE(padded.code.n == 2 * a.rows() * a.cols());
        REQUIRE(check_locality(padded));
        REQUIRE(padded.code.k == params.k);
        auto d = distance_bounded(padded.code, params.d);
        REQUIRE(d.value.has_value());
        REQUIRE(*d.value == params.d);
    };
    // every nonzero 2x2 matrix, plus a random slice of the 3x3 cube
    for (std::uint64_t mask = 1; mask < 16; ++mask) {
        BitMatrix a(2, 2);
        for (std::size_t bit = 0; bit < 4; ++bit)
            if ((mask >> bit) & 1u) a.set(bit / 2, bit % 2, true);
        check_end_to_end(a);
    }
    Xoshiro256 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        BitMatrix a = random_bitmatrix(3, 3, rng);
        if (a.weight() == 0) continue;
        check_end_to_end(a);
    }
}

TEST_CASE("worked example localizes and pads to the full grid") {
    auto local = localize(build_gbs(kExample));
    auto padded = pad_to(local, 18);
    CHECK(padded.code.n == 18);
    CHECK(padded.code.k == 2);
    CHECK(check_locality(padded));
    auto d = distance_bounded(padded.code, 2);
    REQUIRE(d.value.has_value());
    CHECK(*d.value == 2);
    CHECK(is_dressed_logical(padded.code, *d.witness));
}
