#ifndef FORESTKIT_GRAPH_IO_HPP
#define FORESTKIT_GRAPH_IO_HPP

#include "forestkit/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace forestkit {

/// A graph file as written: undirected files keep their edge list so that
/// re-emitting them reproduces the same text.
struct GraphFile {
    bool directed = true;
    std::size_t n = 0;
    std::vector<Arc> arcs;  ///< 0-based; for undirected files each entry is one edge

    WeightedMultiDigraph to_graph() const;
};

/// Text format:
///   digraph <n> | graph <n>
///   <tail> <head> <weight>     (1-based vertices, weight "p", "p/q" or decimal)
/// Lines starting with '#' and blank lines are ignored.
GraphFile parse_graph_text(std::string_view text);

/// {"n": int, "directed": bool, "arcs": [[tail, head, "weight"], ...]}
GraphFile parse_graph_json(std::string_view text);

/// Picks JSON when the first non-blank character is '{'.
GraphFile parse_graph(std::string_view text);

/// Canonical text: header, then arcs stably sorted by (tail, head) with
/// weights as reduced rationals.
std::string emit_graph_text(const GraphFile& file);

} // namespace forestkit

#endif
