// AVX2 variants of the bit kernels. Compiled with -mavx2 in its own
// translation unit; only reached after a runtime cpuid check.
#include "domset/kernels.hpp"

#if defined(DOMSET_HAVE_AVX2)

#include <immintrin.h>

namespace domset::kernels {

namespace {

void or_accumulate_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords) {
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(d, s));
    }
    for (; i < nwords; ++i) dst[i] |= src[i];
}

// Mula nibble-LUT popcount for one 256-bit lane, accumulated as four
// 64-bit counters via SAD against zero.
inline __m256i popcount_lane(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low_mask);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline std::uint64_t reduce_sad(__m256i acc) {
    return static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 0)) +
           static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 1)) +
           static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 2)) +
           static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 3));
}

std::uint64_t popcount_avx2(const std::uint64_t* w, std::size_t nwords) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i));
        acc = _mm256_add_epi64(acc, popcount_lane(v));
    }
    std::uint64_t total = reduce_sad(acc);
    for (; i < nwords; ++i) total += static_cast<std::uint64_t>(__builtin_popcountll(w[i]));
    return total;
}

std::uint64_t andnot_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        // andnot(b, a) = (~b) & a
        acc = _mm256_add_epi64(acc, popcount_lane(_mm256_andnot_si256(vb, va)));
    }
    std::uint64_t total = reduce_sad(acc);
    for (; i < nwords; ++i) total += static_cast<std::uint64_t>(__builtin_popcountll(a[i] & ~b[i]));
    return total;
}

std::uint64_t and_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, popcount_lane(_mm256_and_si256(va, vb)));
    }
    std::uint64_t total = reduce_sad(acc);
    for (; i < nwords; ++i) total += static_cast<std::uint64_t>(__builtin_popcountll(a[i] & b[i]));
    return total;
}

bool andnot_any_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords) {
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        // testz(x, x) == 1 iff x == 0
        __m256i x = _mm256_andnot_si256(vb, va);
        if (!_mm256_testz_si256(x, x)) return true;
    }
    for (; i < nwords; ++i)
        if (a[i] & ~b[i]) return true;
    return false;
}

bool and_any_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords) {
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        if (!_mm256_testz_si256(va, vb)) return true;
    }
    for (; i < nwords; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

} // namespace

const Ops avx2_ops = {
    "avx2",
    &or_accumulate_avx2,
    &popcount_avx2,
    &andnot_popcount_avx2,
    &and_popcount_avx2,
    &andnot_any_avx2,
    &and_any_avx2,
};

} // namespace domset::kernels

#endif // DOMSET_HAVE_AVX2
