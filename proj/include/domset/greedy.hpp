#ifndef DOMSET_GREEDY_HPP
#define DOMSET_GREEDY_HPP

#include <optional>

#include "domset/graph.hpp"

namespace domset {

// Classical set-cover greedy: repeatedly take the vertex whose closed
// neighborhood covers the most currently-undominated vertices.
VertexSet greedy_lnn(const Graph& g);

struct GoodVertexParams {
    double p = 0.5;       // edge probability the threshold is built from
    double epsilon = 0.1; // slack, 0 < epsilon < p
    double D = 2.0;       // absorption constant, > 0
    // threshold uses the shrinking residual order |V(G1)| when true,
    // the original n when false (experiment switch)
    bool residual_order = true;
};

struct GoodGreedyResult {
    std::optional<VertexSet> set; // nullopt: some round had no good vertex
    std::size_t rounds = 0;       // good-vertex picks executed
    std::size_t absorbed = 0;     // residual vertices included at the end
};

// Good-vertex greedy: pick a vertex of degree >= (p - epsilon) * |V(G1)|
// in the residual graph, remove its closed neighborhood, stop and absorb
// the residual once it shrinks below D*log2(n). Empty-handed rounds
// surface as nullopt. Whenever a set is returned it is dominating and
// |set| <= ceil(log_{1/(1-p+eps)} n) + ceil(D*log2 n).
GoodGreedyResult good_vertex_greedy_run(const Graph& g, const GoodVertexParams& params);
std::optional<VertexSet> good_vertex_greedy(const Graph& g, const GoodVertexParams& params);

} // namespace domset

#endif
