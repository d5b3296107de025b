#include "forestkit/graph.hpp"

#include "forestkit/error.hpp"

#include <deque>
#include <string>

namespace forestkit {

namespace {

std::string one_based(Vertex v) { return std::to_string(v + 1); }

} // namespace

WeightedMultiDigraph::WeightedMultiDigraph(std::size_t n, std::vector<Arc> arcs)
    : n_(n), arcs_(std::move(arcs)), out_(n), in_degree_(n, 0) {
    if (n_ < 2)
        throw Error(ErrorCode::TooFewVertices, "a graph needs at least 2 vertices, got " + std::to_string(n_));
    for (std::size_t a = 0; a < arcs_.size(); ++a) {
        const Arc& arc = arcs_[a];
        if (arc.tail >= n_ || arc.head >= n_)
            throw Error(ErrorCode::VertexOutOfRange, "arc " + one_based(arc.tail) + "->" + one_based(arc.head) +
                                                         " leaves vertex range 1.." + std::to_string(n_));
        if (arc.tail == arc.head)
            throw Error(ErrorCode::LoopArc, "loop at vertex " + one_based(arc.tail));
        if (arc.weight <= 0)
            throw Error(ErrorCode::NonPositiveWeight, "arc " + one_based(arc.tail) + "->" + one_based(arc.head) +
                                                          " has weight " + format_rational(arc.weight));
        out_[arc.tail].push_back(a);
        ++in_degree_[arc.head];
    }
}

void WeightedMultiDigraph::check_vertex(Vertex v) const {
    if (v >= n_)
        throw Error(ErrorCode::VertexOutOfRange,
                    "vertex " + one_based(v) + " outside 1.." + std::to_string(n_));
}

std::span<const std::size_t> WeightedMultiDigraph::out_arcs(Vertex v) const {
    check_vertex(v);
    return out_[v];
}

std::size_t WeightedMultiDigraph::out_degree(Vertex v) const {
    check_vertex(v);
    return out_[v].size();
}

std::size_t WeightedMultiDigraph::in_degree(Vertex v) const {
    check_vertex(v);
    return in_degree_[v];
}

WeightedMultiDigraph WeightedMultiDigraph::scaled(const Rational& t) const {
    std::vector<Arc> arcs = arcs_;
    for (auto& a : arcs)
        a.weight *= t;
    return WeightedMultiDigraph(n_, std::move(arcs));
}

WeightedMultiDigraph from_undirected(std::size_t n, std::span<const Edge> edges) {
    std::vector<Arc> arcs;
    arcs.reserve(2 * edges.size());
    for (const auto& e : edges) {
        arcs.push_back({e.u, e.v, e.weight});
        arcs.push_back({e.v, e.u, e.weight});
    }
    return WeightedMultiDigraph(n, std::move(arcs));
}

DenseMatrix<Rational> total_weight_matrix(const WeightedMultiDigraph& g) {
    DenseMatrix<Rational> w(g.vertex_count());
    for (const auto& a : g.arcs())
        w(a.tail, a.head) += a.weight;
    return w;
}

DenseMatrix<Rational> laplacian(const WeightedMultiDigraph& g) {
    DenseMatrix<Rational> l(g.vertex_count());
    for (const auto& a : g.arcs()) {
        l(a.tail, a.head) -= a.weight;
        l(a.tail, a.tail) += a.weight;
    }
    return l;
}

std::vector<Vertex> reachable(const WeightedMultiDigraph& g, Vertex source, std::optional<Vertex> excluded) {
    const std::size_t n = g.vertex_count();
    if (source >= n || (excluded && *excluded >= n))
        throw Error(ErrorCode::VertexOutOfRange, "reachability query outside 1.." + std::to_string(n));
    if (excluded && *excluded == source)
        throw Error(ErrorCode::BadParameters, "source vertex cannot be excluded");

    std::vector<bool> seen(n, false);
    if (excluded)
        seen[*excluded] = true;
    seen[source] = true;
    std::deque<Vertex> queue{source};
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (std::size_t a : g.out_arcs(v)) {
            Vertex h = g.arc(a).head;
            if (!seen[h]) {
                seen[h] = true;
                queue.push_back(h);
            }
        }
    }
    if (excluded)
        seen[*excluded] = false;

    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if (seen[v])
            out.push_back(v);
    return out;
}

} // namespace forestkit
