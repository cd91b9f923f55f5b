#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gbs/gf2.hpp"
#include "helpers.hpp"

using namespace gbs;
using namespace gbs::testing;

TEST_CASE("rank on fixed matrices") {
    CHECK(rank(BitMatrix::ones(3, 3)) == 1);
    CHECK(rank(BitMatrix::identity(3)) == 3);
    // third row is the sum of the first two
    CHECK(rank(BitMatrix::from_strings({"110", "011", "101"})) == 2);
    CHECK(rank(BitMatrix(2, 5)) == 0);
}

TEST_CASE("rank equals rank of the transpose") {
    Xoshiro256 rng(1);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t r = 1 + rng.below(12), c = 1 + rng.below(12);
        BitMatrix a = random_bitmatrix(r, c, rng);
        CHECK(rank(a) == rank(a.transposed()));
    }
}

TEST_CASE("kernel basis") {
    CHECK(kernel_basis(BitMatrix::identity(3)).empty());

    auto kb = kernel_basis(BitMatrix::from_strings({"110", "011", "101"}));
    REQUIRE(kb.size() == 1);
    CHECK(kb[0] == BitVector::from_string("111"));

    // all-ones: kernel is the even-weight subspace
    auto kb2 = kernel_basis(BitMatrix::ones(3, 3));
    CHECK(kb2.size() == 2);
    for (const auto& v : kb2) CHECK(BitMatrix::ones(3, 3).mul(v).is_zero());
}

TEST_CASE("kernel dimension + rank = columns") {
    Xoshiro256 rng(2);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t r = 1 + rng.below(10), c = 1 + rng.below(10);
        BitMatrix a = random_bitmatrix(r, c, rng);
        auto kb = kernel_basis(a);
        CHECK(kb.size() + rank(a) == c);
        for (const auto& v : kb) CHECK(a.mul(v).is_zero());
        // returned vectors are independent
        CHECK(rank(BitMatrix::from_rows(kb)) == kb.size());
    }
}

TEST_CASE("min weight on fixed spans") {
    // rows of the k=3 inner-product matrix span a code of minimum weight 4
    BitMatrix had(7, 7);
    for (std::size_t x = 1; x <= 7; ++x)
        for (std::size_t y = 1; y <= 7; ++y)
            if (__builtin_popcountll(x & y) & 1) had.set(x - 1, y - 1, true);
    std::vector<BitVector> rows(had.row_span().begin(), had.row_span().end());
    CHECK(min_weight_nonzero(rows).weight == 4);

    std::vector<BitVector> ones = {BitVector::from_string("11111")};
    CHECK(min_weight_nonzero(ones).weight == 5);

    std::vector<BitVector> tri = {BitVector::from_string("110"), BitVector::from_string("011"),
                                  BitVector::from_string("101")};
    auto r = min_weight_nonzero(tri);
    CHECK(r.weight == 2);
    CHECK(r.witness.weight() == 2);
}

TEST_CASE("min weight errors") {
    std::vector<BitVector> empty;
    CHECK_THROWS_AS(min_weight_nonzero(empty), EmptyCode);
    std::vector<BitVector> zero = {BitVector(4)};
    CHECK_THROWS_AS(min_weight_nonzero(zero), EmptyCode);

    Xoshiro256 rng(3);
    std::vector<BitVector> big;
    for (int i = 0; i < 8; ++i) big.push_back(random_bitvector(40, rng));
    if (rank(BitMatrix::from_rows(big)) == 8)
        CHECK_THROWS_AS(min_weight_nonzero(big, /*cap=*/100), CapExceeded);
}

TEST_CASE("gray-code sweep matches naive span enumeration") {
    Xoshiro256 rng(4);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t width = 2 + rng.below(24);
        const std::size_t count = 1 + rng.below(14);
        std::vector<BitVector> basis;
        for (std::size_t i = 0; i < count; ++i) basis.push_back(random_bitvector(width, rng));
        if (row_reduce(basis).empty()) continue;
        CHECK(min_weight_nonzero(basis).weight == naive_span_min_weight(basis));
    }
}

TEST_CASE("membership") {
    std::vector<BitVector> basis = {BitVector::from_string("110"), BitVector::from_string("011")};
    auto zero = membership(basis, BitVector(3));
    REQUIRE(zero.has_value());
    CHECK(zero->is_zero());

    auto both = membership(basis, BitVector::from_string("101"));
    REQUIRE(both.has_value());
    CHECK(both->get(0));
    CHECK(both->get(1));

    CHECK_FALSE(membership(basis, BitVector::from_string("100")).has_value());
}

TEST_CASE("row reduction is idempotent and span-preserving") {
    Xoshiro256 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t width = 1 + rng.below(16);
        const std::size_t count = 1 + rng.below(8);
        std::vector<BitVector> basis;
        for (std::size_t i = 0; i < count; ++i) basis.push_back(random_bitvector(width, rng));

        auto reduced = row_reduce(basis);
        CHECK(row_reduce(reduced) == reduced);
        if (reduced.empty()) continue;

        SpanSolver before_ok(row_reduce(basis));  // reduce to guarantee independence
        SpanSolver after_ok(reduced);
        for (int probe = 0; probe < 10; ++probe) {
            BitVector v = random_bitvector(width, rng);
            CHECK(before_ok.contains(v) == after_ok.contains(v));
        }
    }
}

TEST_CASE("solver rejects dependent bases") {
    std::vector<BitVector> dep = {BitVector::from_string("110"), BitVector::from_string("110")};
    CHECK_THROWS_AS(SpanSolver{dep}, Error);
}
