#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace gbs {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

namespace kernels {

/*
 * Word-level inner loops shared by the whole library: every bit vector
 * operation and both enumeration oracles bottom out here. Each kernel has
 * a portable scalar implementation and, on x86-64 builds, an AVX2 variant.
 * The active set is chosen once at startup from CPUID and can be overridden
 * with select() (used by the equivalence tests and the --kernels flag).
 * Scalar and SIMD variants must be bit-identical; test_kernels checks that.
 */
struct KernelOps {
    const char* name;
    // dst ^= src
    void (*xor_words)(Word* dst, const Word* src, std::size_t n);
    std::uint64_t (*popcount)(const Word* p, std::size_t n);
    std::uint64_t (*and_popcount)(const Word* a, const Word* b, std::size_t n);
    std::uint64_t (*or_popcount)(const Word* a, const Word* b, std::size_t n);
    // dst ^= src, returns popcount of the result
    std::uint64_t (*xor_popcount)(Word* dst, const Word* src, std::size_t n);
    // x ^= gx, z ^= gz, returns popcount(x | z); the Pauli-weight step of
    // the Gray-code distance walk
    std::uint64_t (*pauli_xor_weight)(Word* x, const Word* gx, Word* z, const Word* gz,
                                      std::size_t n);
};

const KernelOps& active();
const KernelOps& scalar_ops();
// Null when the binary was built without AVX2 or the CPU lacks it.
const KernelOps* avx2_ops();

// name: "scalar", "avx2" or "auto"; returns false if unavailable.
bool select(std::string_view name);

}  // namespace kernels
}  // namespace gbs
