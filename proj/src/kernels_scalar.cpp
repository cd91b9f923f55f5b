#include <bit>

#include "gbs/kernels.hpp"

namespace gbs::kernels {
namespace {

void xor_words_scalar(Word* dst, const Word* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

std::uint64_t popcount_scalar(const Word* p, std::size_t n) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += std::popcount(p[i]);
    return c;
}

std::uint64_t and_popcount_scalar(const Word* a, const Word* b, std::size_t n) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

std::uint64_t or_popcount_scalar(const Word* a, const Word* b, std::size_t n) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += std::popcount(a[i] | b[i]);
    return c;
}

std::uint64_t xor_popcount_scalar(Word* dst, const Word* src, std::size_t n) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] ^= src[i];
        c += std::popcount(dst[i]);
    }
    return c;
}

std::uint64_t pauli_xor_weight_scalar(Word* x, const Word* gx, Word* z, const Word* gz,
                                      std::size_t n) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i) {
        x[i] ^= gx[i];
        z[i] ^= gz[i];
        c += std::popcount(x[i] | z[i]);
    }
    return c;
}

}  // namespace

const KernelOps& scalar_ops() {
    static const KernelOps ops = {
        "scalar",           xor_words_scalar, popcount_scalar,
        and_popcount_scalar, or_popcount_scalar, xor_popcount_scalar,
        pauli_xor_weight_scalar,
    };
    return ops;
}

}  // namespace gbs::kernels
