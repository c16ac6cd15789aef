#ifndef DOMSET_RNG_HPP
#define DOMSET_RNG_HPP

#include <cstdint>

// Counter-based random streams. Everything downstream (graph generation,
// trial fan-out) derives from these two formulas, so seeded runs replay
// bit-identically across platforms and thread schedules.
namespace domset::rng {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Draw for position `counter` of the stream named by `seed`:
//   draw(seed, counter) = splitmix64(splitmix64(counter) xor seed)
constexpr std::uint64_t draw(std::uint64_t seed, std::uint64_t counter) {
    return splitmix64(splitmix64(counter) ^ seed);
}

// 53-bit mantissa uniform in [0, 1)
constexpr double to_unit(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

constexpr double draw_unit(std::uint64_t seed, std::uint64_t counter) {
    return to_unit(draw(seed, counter));
}

// Trial fan-out used by the experiment harness:
//   mix(base, n, trial, algo) = sm(sm(sm(sm(base) ^ n) ^ trial) ^ algo)
// with sm = splitmix64.
constexpr std::uint64_t mix_seed(std::uint64_t base, std::uint64_t n, std::uint64_t trial,
                                 std::uint64_t algo_ordinal) {
    std::uint64_t h = splitmix64(base);
    h = splitmix64(h ^ n);
    h = splitmix64(h ^ trial);
    h = splitmix64(h ^ algo_ordinal);
    return h;
}

} // namespace domset::rng

#endif
