// AVX2 variants of the word kernels. Compiled with -mavx2 for this file
// only; callers reach it through the dispatch table, never directly, so the
// rest of the library stays baseline-ISA.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <bit>

#include "gbs/kernels.hpp"

namespace gbs::kernels {
namespace {

// Nibble-LUT popcount: per-byte counts via vpshufb, then horizontal
// accumulation with vpsadbw into four 64-bit lanes.
inline __m256i popcount256(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline std::uint64_t hsum(__m256i acc) {
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

void xor_words_avx2(Word* dst, const Word* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

std::uint64_t popcount_avx2(const Word* p, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
        acc = _mm256_add_epi64(acc, popcount256(v));
    }
    std::uint64_t c = hsum(acc);
    for (; i < n; ++i) c += std::popcount(p[i]);
    return c;
}

std::uint64_t and_popcount_avx2(const Word* a, const Word* b, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, popcount256(_mm256_and_si256(va, vb)));
    }
    std::uint64_t c = hsum(acc);
    for (; i < n; ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

std::uint64_t or_popcount_avx2(const Word* a, const Word* b, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, popcount256(_mm256_or_si256(va, vb)));
    }
    std::uint64_t c = hsum(acc);
    for (; i < n; ++i) c += std::popcount(a[i] | b[i]);
    return c;
}

std::uint64_t xor_popcount_avx2(Word* dst, const Word* src, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i r = _mm256_xor_si256(d, s);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
        acc = _mm256_add_epi64(acc, popcount256(r));
    }
    std::uint64_t c = hsum(acc);
    for (; i < n; ++i) {
        dst[i] ^= src[i];
        c += std::popcount(dst[i]);
    }
    return c;
}

std::uint64_t pauli_xor_weight_avx2(Word* x, const Word* gx, Word* z, const Word* gz,
                                    std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i vx = _mm256_xor_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i)),
                                      _mm256_loadu_si256(reinterpret_cast<const __m256i*>(gx + i)));
        __m256i vz = _mm256_xor_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(z + i)),
                                      _mm256_loadu_si256(reinterpret_cast<const __m256i*>(gz + i)));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(x + i), vx);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(z + i), vz);
        acc = _mm256_add_epi64(acc, popcount256(_mm256_or_si256(vx, vz)));
    }
    std::uint64_t c = hsum(acc);
    for (; i < n; ++i) {
        x[i] ^= gx[i];
        z[i] ^= gz[i];
        c += std::popcount(x[i] | z[i]);
    }
    return c;
}

}  // namespace

const KernelOps* avx2_ops_impl() {
    static const KernelOps ops = {
        "avx2",           xor_words_avx2, popcount_avx2,
        and_popcount_avx2, or_popcount_avx2, xor_popcount_avx2,
        pauli_xor_weight_avx2,
    };
    return &ops;
}

}  // namespace gbs::kernels

#endif  // x86-64
