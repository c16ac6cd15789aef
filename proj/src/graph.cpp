#include "domset/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "domset/rng.hpp"

namespace domset {

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::from_bits(const Bitset& b) {
    VertexSet s;
    for (std::size_t v = b.find_first(); v < b.size(); v = b.find_next(v + 1))
        s.ids_.push_back(static_cast<Vertex>(v));
    return s;
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

Bitset VertexSet::to_bits(std::size_t n) const {
    Bitset b(n);
    for (Vertex v : ids_) {
        if (v >= n) throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range");
        b.set(v);
    }
    return b;
}

Graph::Graph(std::uint32_t n, const std::vector<std::pair<Vertex, Vertex>>& edges)
    : n_(n), wpr_(Bitset::words_for(n)) {
    adj_.assign(static_cast<std::size_t>(n) * wpr_, 0);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop rejected");
        auto* ru = adj_.data() + static_cast<std::size_t>(u) * wpr_;
        auto* rv = adj_.data() + static_cast<std::size_t>(v) * wpr_;
        const bool already = (ru[v >> 6] >> (v & 63)) & 1u;
        ru[v >> 6] |= std::uint64_t{1} << (v & 63);
        rv[u >> 6] |= std::uint64_t{1} << (u & 63);
        if (!already) ++m_;
    }
    cadj_ = adj_;
    for (std::uint32_t v = 0; v < n_; ++v)
        cadj_[static_cast<std::size_t>(v) * wpr_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
}

void Graph::check_vertex(Vertex v) const {
    if (v >= n_) throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range");
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
}

std::uint32_t Graph::degree(Vertex v) const {
    check_vertex(v);
    auto r = row(v);
    return static_cast<std::uint32_t>(kernels::active().popcount(r.data(), r.size()));
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> out;
    auto r = row(v);
    for (std::size_t wi = 0; wi < r.size(); ++wi) {
        std::uint64_t w = r[wi];
        while (w) {
            out.push_back(static_cast<Vertex>((wi << 6) + __builtin_ctzll(w)));
            w &= w - 1;
        }
    }
    return out;
}

Graph gen_random_graph(const GenParams& params) {
    if (params.n < 1) throw std::invalid_argument("n must be at least 1");
    if (!(params.p > 0.0 && params.p < 1.0))
        throw std::invalid_argument("edge probability p must lie in (0,1)");
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::uint64_t counter = 0;
    for (Vertex u = 0; u < params.n; ++u)
        for (Vertex v = u + 1; v < params.n; ++v, ++counter)
            if (rng::draw_unit(params.seed, counter) < params.p) edges.emplace_back(u, v);
    return Graph(params.n, edges);
}

Bitset closure_bits(const Graph& g, const VertexSet& s) {
    Bitset covered = s.to_bits(g.vertex_count());
    for (Vertex v : s) covered.or_row(g.row(v));
    return covered;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
    return closure_bits(g, s).full();
}

VertexSet dominated_closure(const Graph& g, const VertexSet& s) {
    return VertexSet::from_bits(closure_bits(g, s));
}

std::uint32_t degree(const Graph& g, Vertex v) { return g.degree(v); }

} // namespace domset
