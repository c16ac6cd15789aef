#include "domset/exact.hpp"

#include <algorithm>

#include "domset/greedy.hpp"

namespace domset {

namespace {

// Shared state for the ascending-cardinality exhaustive search.
struct EnumCtx {
    const Graph& g;
    std::size_t n;
    std::size_t wpr;
    // suffix_union[i] = union of closed rows of vertices i..n-1
    std::vector<std::uint64_t> suffix_union;
    // suffix_max_cover[i] = max closed-neighborhood size among i..n-1
    std::vector<std::uint32_t> suffix_max_cover;
    std::vector<Vertex> chosen;
    std::uint64_t nodes = 0;

    explicit EnumCtx(const Graph& graph)
        : g(graph), n(graph.vertex_count()), wpr(graph.words_per_row()) {
        suffix_union.assign((n + 1) * wpr, 0);
        suffix_max_cover.assign(n + 1, 0);
        for (std::size_t i = n; i-- > 0;) {
            auto* dst = suffix_union.data() + i * wpr;
            std::copy_n(suffix_union.data() + (i + 1) * wpr, wpr, dst);
            auto row = g.closed_row(static_cast<Vertex>(i));
            kernels::active().or_accumulate(dst, row.data(), wpr);
            const auto cover = static_cast<std::uint32_t>(kernels::active().popcount(row.data(), wpr));
            suffix_max_cover[i] = std::max(suffix_max_cover[i + 1], cover);
        }
    }

    bool closure_full(const Bitset& closure) const { return closure.count() == n; }

    // can vertices start..n-1 ever complete the closure?
    bool suffix_can_cover(const Bitset& closure, std::size_t start) const {
        const auto& ops = kernels::active();
        // anything outside closure | suffix_union[start] -> impossible
        Bitset all(n);
        all.set_all();
        std::vector<std::uint64_t> reach(closure.words().begin(), closure.words().end());
        ops.or_accumulate(reach.data(), suffix_union.data() + start * wpr, wpr);
        return !ops.andnot_any(all.words().data(), reach.data(), wpr);
    }

    // lexicographic DFS over subsets of size exactly k; first hit is the
    // lexicographically smallest dominating set of that size
    bool search(std::size_t start, std::size_t remaining, const Bitset& closure) {
        ++nodes;
        if (remaining == 0) return closure_full(closure);
        const std::size_t uncovered = n - closure.count();
        if (uncovered > remaining * suffix_max_cover[start]) return false;
        if (!suffix_can_cover(closure, start)) return false;
        for (std::size_t v = start; v + remaining <= n; ++v) {
            Bitset next = closure;
            next.or_row(g.closed_row(static_cast<Vertex>(v)));
            chosen.push_back(static_cast<Vertex>(v));
            if (search(v + 1, remaining - 1, next)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

} // namespace

std::optional<VertexSet> bounded_domset_search(const Graph& g, std::size_t cap,
                                               std::uint64_t& nodes_explored) {
    EnumCtx ctx(g);
    const std::size_t n = g.vertex_count();
    for (std::size_t k = 0; k <= std::min(cap, n); ++k) {
        ctx.chosen.clear();
        Bitset empty(n);
        if (ctx.search(0, k, empty)) {
            nodes_explored = ctx.nodes;
            return VertexSet(ctx.chosen);
        }
    }
    nodes_explored = ctx.nodes;
    return std::nullopt;
}

std::optional<VertexSet> bounded_domset_search(const Graph& g, std::size_t cap) {
    std::uint64_t nodes = 0;
    return bounded_domset_search(g, cap, nodes);
}

SolveOutcome min_domset_enum(const Graph& g) {
    std::uint64_t nodes = 0;
    auto witness = bounded_domset_search(g, g.vertex_count(), nodes);
    // V always dominates, so the full-cap search cannot miss
    SolveOutcome out;
    out.witness = std::move(*witness);
    out.size = out.witness.size();
    out.method = SolveMethod::enumeration;
    out.nodes_explored = nodes;
    return out;
}

namespace {

struct BBCtx {
    const Graph& g;
    std::size_t n;
    std::size_t wpr;
    std::vector<Vertex> chosen;
    std::vector<Vertex> best;
    std::size_t best_size;
    std::uint64_t nodes = 0;

    BBCtx(const Graph& graph, std::vector<Vertex> initial_best)
        : g(graph), n(graph.vertex_count()), wpr(graph.words_per_row()),
          best(std::move(initial_best)), best_size(best.size()) {}

    void run(const Bitset& covered, const Bitset& forbidden) {
        ++nodes;
        const std::size_t covered_count = covered.count();
        if (covered_count == n) {
            if (chosen.size() < best_size) {
                best_size = chosen.size();
                best = chosen;
            }
            return;
        }
        if (chosen.size() + 1 >= best_size) return;

        const auto& ops = kernels::active();
        const std::size_t uncovered = n - covered_count;

        // max residual coverage over allowed vertices, for the lower bound
        std::size_t max_gain = 0;
        for (std::size_t u = 0; u < n; ++u) {
            if (forbidden.test(u)) continue;
            auto row = g.closed_row(static_cast<Vertex>(u));
            const std::size_t gain = ops.andnot_popcount(row.data(), covered.words().data(), wpr);
            max_gain = std::max(max_gain, gain);
        }
        if (max_gain == 0) return; // some vertex can no longer be covered
        const std::size_t lower = chosen.size() + (uncovered + max_gain - 1) / max_gain;
        if (lower >= best_size) return;

        // branch vertex: undominated, fewest allowed coverers, lowest id
        std::size_t branch_v = n;
        std::size_t branch_options = n + 1;
        for (std::size_t v = 0; v < n; ++v) {
            if (covered.test(v)) continue;
            auto row = g.closed_row(static_cast<Vertex>(v));
            const std::size_t options =
                ops.andnot_popcount(row.data(), forbidden.words().data(), wpr);
            if (options == 0) return; // v has become uncoverable
            if (options < branch_options) {
                branch_options = options;
                branch_v = v;
                if (options == 1) break;
            }
        }

        // cover branch_v: the i-th branch picks coverer u_i and forbids
        // u_1..u_{i-1}, partitioning the solution space
        Bitset child_forbidden = forbidden;
        auto vrow = g.closed_row(static_cast<Vertex>(branch_v));
        for (std::size_t wi = 0; wi < wpr; ++wi) {
            std::uint64_t w = vrow[wi] & ~forbidden.words()[wi];
            while (w) {
                const auto u = static_cast<Vertex>((wi << 6) + __builtin_ctzll(w));
                w &= w - 1;
                Bitset child_covered = covered;
                child_covered.or_row(g.closed_row(u));
                chosen.push_back(u);
                run(child_covered, child_forbidden);
                chosen.pop_back();
                child_forbidden.set(u);
            }
        }
    }
};

} // namespace

SolveOutcome min_domset_bb(const Graph& g) {
    VertexSet ub = greedy_lnn(g);
    BBCtx ctx(g, ub.ids());
    Bitset covered(g.vertex_count());
    Bitset forbidden(g.vertex_count());
    ctx.run(covered, forbidden);
    SolveOutcome out;
    out.witness = VertexSet(ctx.best);
    out.size = out.witness.size();
    out.method = SolveMethod::branch_and_bound;
    out.nodes_explored = ctx.nodes;
    return out;
}

std::pair<bool, std::optional<VertexSet>> has_domset_of_size(const Graph& g, std::size_t k,
                                                             DecideStrategy strategy) {
    if (strategy == DecideStrategy::bounded_search) {
        auto w = bounded_domset_search(g, k);
        if (w) return {true, std::move(w)};
        return {false, std::nullopt};
    }
    SolveOutcome o = min_domset_bb(g);
    if (o.size <= k) return {true, std::move(o.witness)};
    return {false, std::nullopt};
}

} // namespace domset
