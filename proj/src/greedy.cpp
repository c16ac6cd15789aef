#include "domset/greedy.hpp"

#include <cmath>
#include <stdexcept>

#include "domset/thresholds.hpp"

namespace domset {

VertexSet greedy_lnn(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const std::size_t wpr = g.words_per_row();
    const auto& ops = kernels::active();
    Bitset covered(n);
    std::vector<Vertex> picks;
    std::size_t covered_count = 0;
    while (covered_count < n) {
        std::size_t best_gain = 0;
        Vertex best_v = 0;
        for (std::size_t v = 0; v < n; ++v) {
            auto row = g.closed_row(static_cast<Vertex>(v));
            const std::size_t gain = ops.andnot_popcount(row.data(), covered.words().data(), wpr);
            if (gain > best_gain) {
                best_gain = gain;
                best_v = static_cast<Vertex>(v);
            }
        }
        // an uncovered vertex always grants itself, so best_gain >= 1
        picks.push_back(best_v);
        covered.or_row(g.closed_row(best_v));
        covered_count += best_gain;
    }
    return VertexSet(picks);
}

GoodGreedyResult good_vertex_greedy_run(const Graph& g, const GoodVertexParams& params) {
    if (!(params.epsilon > 0.0 && params.epsilon < params.p && params.p < 1.0))
        throw std::invalid_argument("need 0 < epsilon < p < 1");
    if (!(params.D > 0.0)) throw std::invalid_argument("D must be positive");
    const std::size_t n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("good-vertex greedy needs n >= 2");

    const std::size_t wpr = g.words_per_row();
    const auto& ops = kernels::active();
    const double absorb_below = params.D * std::log2(static_cast<double>(n));
    const double keep_rate = 1.0 - params.p + params.epsilon;

    Bitset residual(n);
    residual.set_all();
    std::size_t residual_count = n;
    std::vector<Vertex> picks;
    GoodGreedyResult result;

    while (true) {
        // residual degree = |N(v) & residual|; take the max-degree vertex
        // and test it against the good-vertex threshold
        std::size_t best_deg = 0;
        Vertex best_v = 0;
        bool have_v = false;
        for (std::size_t v = residual.find_first(); v < n; v = residual.find_next(v + 1)) {
            auto row = g.row(static_cast<Vertex>(v));
            const std::size_t deg = ops.and_popcount(row.data(), residual.words().data(), wpr);
            if (!have_v || deg > best_deg) {
                best_deg = deg;
                best_v = static_cast<Vertex>(v);
                have_v = true;
            }
        }
        const double order = params.residual_order ? static_cast<double>(residual_count)
                                                   : static_cast<double>(n);
        if (!have_v || !meets_threshold(static_cast<double>(best_deg), (params.p - params.epsilon) * order)) {
            result.set = std::nullopt;
            result.rounds = picks.size();
            return result;
        }

        picks.push_back(best_v);
        ++result.rounds;
        // remove best_v and its neighbors from the residual graph
        auto crow = g.closed_row(best_v);
        for (std::size_t wi = 0; wi < wpr; ++wi) residual.words()[wi] &= ~crow[wi];
        const std::size_t new_count = residual.count();
        // geometric decay: survivors <= (1-p+eps) * previous order
        if (params.residual_order &&
            static_cast<double>(new_count) > keep_rate * static_cast<double>(residual_count) + 1e-6)
            throw std::logic_error("residual shrinkage invariant violated");
        residual_count = new_count;

        if (static_cast<double>(residual_count) < absorb_below) {
            for (std::size_t v = residual.find_first(); v < n; v = residual.find_next(v + 1))
                picks.push_back(static_cast<Vertex>(v));
            result.absorbed = residual_count;
            result.set = VertexSet(picks);
            return result;
        }
    }
}

std::optional<VertexSet> good_vertex_greedy(const Graph& g, const GoodVertexParams& params) {
    return good_vertex_greedy_run(g, params).set;
}

} // namespace domset
