#ifndef DOMSET_THRESHOLDS_HPP
#define DOMSET_THRESHOLDS_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>

// Shared threshold arithmetic. All real-valued cardinality expressions are
// materialized as ceil(x - 1e-9): the guard keeps values that land exactly
// on an integer from being bumped one past it by rounding noise.
namespace domset {

inline constexpr double kCeilGuard = 1e-9;

// q = 1/(1-p)
inline double q_of(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("edge probability p must lie in (0,1)");
    return 1.0 / (1.0 - p);
}

// log_q(x) computed as log(x)/log(q)
inline double log_q(double x, double p) { return std::log(x) / std::log(q_of(p)); }

inline long long ceil_guarded(double x) { return static_cast<long long>(std::ceil(x - kCeilGuard)); }

inline int clamp_cap(double x, int n, int lo = 0) {
    const long long c = ceil_guarded(x);
    return static_cast<int>(std::clamp<long long>(c, lo, n));
}

// count >= threshold, tolerating rounding noise in threshold
inline bool meets_threshold(double count, double threshold) { return count >= threshold - kCeilGuard; }

} // namespace domset

#endif
