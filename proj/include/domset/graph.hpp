#ifndef DOMSET_GRAPH_HPP
#define DOMSET_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "domset/bitset.hpp"

namespace domset {

using Vertex = std::uint32_t;

// Sorted, duplicate-free vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<Vertex> ids);
    static VertexSet from_bits(const Bitset& b);

    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    bool contains(Vertex v) const;
    const std::vector<Vertex>& ids() const { return ids_; }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    Bitset to_bits(std::size_t n) const;

    bool operator==(const VertexSet&) const = default;

private:
    std::vector<Vertex> ids_;
};

struct GenParams {
    std::uint32_t n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

// Immutable simple undirected graph over ids 0..n-1 with bit-packed
// adjacency rows (row v holds the open neighborhood of v).
class Graph {
public:
    Graph() = default;
    // edges as unordered pairs; throws on self-loops / out-of-range ids
    Graph(std::uint32_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    std::uint32_t vertex_count() const { return n_; }
    std::uint64_t edge_count() const { return m_; }
    std::size_t words_per_row() const { return wpr_; }

    bool adjacent(Vertex u, Vertex v) const;
    std::span<const std::uint64_t> row(Vertex v) const { return {adj_.data() + v * wpr_, wpr_}; }
    std::span<const std::uint64_t> closed_row(Vertex v) const { return {cadj_.data() + v * wpr_, wpr_}; }

    std::uint32_t degree(Vertex v) const;
    std::vector<Vertex> neighbors(Vertex v) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    void check_vertex(Vertex v) const;

    std::uint32_t n_ = 0;
    std::uint64_t m_ = 0;
    std::size_t wpr_ = 0;
    std::vector<std::uint64_t> adj_;  // open neighborhoods, row-major
    std::vector<std::uint64_t> cadj_; // closed neighborhoods (row | self bit)
};

// Seeded G(n,p): pair (u,v), u<v, in lexicographic order is an edge iff
// rng::draw_unit(seed, pair_index) < p. Identical params give identical bits.
Graph gen_random_graph(const GenParams& params);

// true iff every vertex outside s has a neighbor in s (members of s are
// exempt; an isolated member is fine)
bool is_dominating(const Graph& g, const VertexSet& s);

// s together with every vertex adjacent to a member of s
VertexSet dominated_closure(const Graph& g, const VertexSet& s);

// closure as a bit mask; shared by the solvers
Bitset closure_bits(const Graph& g, const VertexSet& s);

std::uint32_t degree(const Graph& g, Vertex v);

} // namespace domset

#endif
