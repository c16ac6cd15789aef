#ifndef DOMSET_KERNELS_HPP
#define DOMSET_KERNELS_HPP

#include <cstddef>
#include <cstdint>

// Word-level bit kernels behind every solver inner loop: closure
// accumulation, coverage counting and domination scans over bit-packed
// adjacency rows. A scalar reference implementation always exists; an
// AVX2 variant is selected at runtime when the CPU supports it. The two
// backends are equivalence-tested against each other.
namespace domset::kernels {

struct Ops {
    const char* name;
    // dst[i] |= src[i]
    void (*or_accumulate)(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);
    // number of set bits in w
    std::uint64_t (*popcount)(const std::uint64_t* w, std::size_t nwords);
    // |a & ~b|  (coverage gain of row a against covered-mask b)
    std::uint64_t (*andnot_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);
    // |a & b|  (e.g. residual degree of a row against a live-vertex mask)
    std::uint64_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);
    // (a & ~b) != 0  (does a reach outside b)
    bool (*andnot_any)(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);
    // (a & b) != 0  (do a and b intersect)
    bool (*and_any)(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);
};

enum class Backend { auto_detect, scalar, avx2 };

extern const Ops scalar_ops;

bool avx2_supported();

// Active table; resolved once on first use (auto picks AVX2 when available).
const Ops& active();

// Force a backend (tests, benchmarking). Returns the name of the table now
// active. Selecting avx2 on a CPU without it falls back to scalar.
const char* select_backend(Backend b);

} // namespace domset::kernels

#endif
