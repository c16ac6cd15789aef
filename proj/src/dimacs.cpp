#include "domset/dimacs.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace domset {

namespace {

bool parse_u32(const std::string& tok, std::uint32_t& out) {
    if (tok.empty()) return false;
    std::uint64_t v = 0;
    for (char c : tok) {
        if (c < '0' || c > '9') return false;
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
        if (v > 0xFFFFFFFFull) return false;
    }
    out = static_cast<std::uint32_t>(v);
    return true;
}

} // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_header = false;
    std::uint32_t n = 0, declared_m = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::set<std::pair<Vertex, Vertex>> seen;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        if (kind == "c") continue;
        if (kind == "p") {
            if (have_header) throw DimacsError(line_no, "duplicate header");
            std::string fmt, ns, ms, extra;
            if (!(ls >> fmt >> ns >> ms) || fmt != "edge" || (ls >> extra))
                throw DimacsError(line_no, "malformed header, expected 'p edge <n> <m>'");
            if (!parse_u32(ns, n) || !parse_u32(ms, declared_m) || n == 0)
                throw DimacsError(line_no, "malformed header counts");
            have_header = true;
            continue;
        }
        if (kind == "e") {
            if (!have_header) throw DimacsError(line_no, "edge before header");
            std::string us, vs, extra;
            std::uint32_t u1 = 0, v1 = 0;
            if (!(ls >> us >> vs) || (ls >> extra) || !parse_u32(us, u1) || !parse_u32(vs, v1))
                throw DimacsError(line_no, "malformed edge line, expected 'e <u> <v>'");
            if (u1 == 0 || v1 == 0 || u1 > n || v1 > n)
                throw DimacsError(line_no, "vertex id out of range 1.." + std::to_string(n));
            if (u1 == v1) throw DimacsError(line_no, "self-loop");
            Vertex u = u1 - 1, v = v1 - 1;
            if (u > v) std::swap(u, v);
            if (!seen.insert({u, v}).second) throw DimacsError(line_no, "duplicate edge");
            edges.emplace_back(u, v);
            continue;
        }
        throw DimacsError(line_no, "unrecognized line type '" + kind + "'");
    }
    if (!have_header) throw DimacsError(line_no, "missing 'p edge' header");
    if (edges.size() != declared_m)
        throw DimacsError(line_no, "header declares " + std::to_string(declared_m) + " edges, found " +
                                       std::to_string(edges.size()));
    return Graph(n, edges);
}

std::string serialize_graph(const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(g.edge_count());
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v : g.neighbors(u))
            if (u < v) edges.emplace_back(u, v);
    // neighbors() walks ascending ids, so edges are already sorted
    std::string out = "p edge " + std::to_string(g.vertex_count()) + " " + std::to_string(edges.size()) + "\n";
    for (auto [u, v] : edges)
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

Graph load_graph_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_graph(ss.str());
}

void save_graph_file(const Graph& g, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << serialize_graph(g);
    if (!f) throw std::runtime_error("write failed: " + path);
}

} // namespace domset
