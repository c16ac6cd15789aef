#ifndef DOMSET_DIMACS_HPP
#define DOMSET_DIMACS_HPP

#include <stdexcept>
#include <string>

#include "domset/graph.hpp"

namespace domset {

struct DimacsError : std::runtime_error {
    DimacsError(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    int line;
};

// DIMACS edge format: "p edge <n> <m>" header, then m lines "e <u> <v>"
// with 1-indexed endpoints. Comment lines ("c ...") are accepted on input.
Graph parse_graph(const std::string& text);

// Canonical form: LF endings, no comments, edges sorted lexicographically.
std::string serialize_graph(const Graph& g);

Graph load_graph_file(const std::string& path);
void save_graph_file(const Graph& g, const std::string& path);

} // namespace domset

#endif
