#ifndef DOMSET_EXACT_HPP
#define DOMSET_EXACT_HPP

#include <cstdint>
#include <optional>

#include "domset/graph.hpp"

namespace domset {

enum class SolveMethod { enumeration, branch_and_bound };

struct SolveOutcome {
    std::size_t size = 0;
    VertexSet witness;
    SolveMethod method = SolveMethod::enumeration;
    std::uint64_t nodes_explored = 0; // recursion nodes visited
};

// Exhaustive search ascending by cardinality; witness is the
// lexicographically smallest dominating set at the first feasible size.
// Intended for n up to ~25.
SolveOutcome min_domset_enum(const Graph& g);

// Minimum dominating set of size <= cap, or nullopt when none exists.
// Ascends by cardinality and stops at the first success.
std::optional<VertexSet> bounded_domset_search(const Graph& g, std::size_t cap);
std::optional<VertexSet> bounded_domset_search(const Graph& g, std::size_t cap,
                                               std::uint64_t& nodes_explored);

// Set-cover branch and bound over closed neighborhoods: branches on an
// undominated vertex with the fewest remaining coverage options, greedy
// upper bound, lower bound ceil(undominated / max closed-neighborhood
// coverage). Intended for n up to ~60.
SolveOutcome min_domset_bb(const Graph& g);

enum class DecideStrategy { bounded_search, branch_and_bound };

// Does g have a dominating set of size <= k?
std::pair<bool, std::optional<VertexSet>> has_domset_of_size(
    const Graph& g, std::size_t k, DecideStrategy strategy = DecideStrategy::bounded_search);

} // namespace domset

#endif
