#include "domset/kernels.hpp"

namespace domset::kernels {

namespace {

void or_accumulate_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords) {
    for (std::size_t i = 0; i < nwords; ++i) dst[i] |= src[i];
}

std::uint64_t popcount_scalar(const std::uint64_t* w, std::size_t nwords) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < nwords; ++i) total += static_cast<std::uint64_t>(__builtin_popcountll(w[i]));
    return total;
}

std::uint64_t andnot_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < nwords; ++i) total += static_cast<std::uint64_t>(__builtin_popcountll(a[i] & ~b[i]));
    return total;
}

std::uint64_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < nwords; ++i) total += static_cast<std::uint64_t>(__builtin_popcountll(a[i] & b[i]));
    return total;
}

bool andnot_any_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords) {
    for (std::size_t i = 0; i < nwords; ++i)
        if (a[i] & ~b[i]) return true;
    return false;
}

bool and_any_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords) {
    for (std::size_t i = 0; i < nwords; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

} // namespace

const Ops scalar_ops = {
    "scalar",
    &or_accumulate_scalar,
    &popcount_scalar,
    &andnot_popcount_scalar,
    &and_popcount_scalar,
    &andnot_any_scalar,
    &and_any_scalar,
};

} // namespace domset::kernels
