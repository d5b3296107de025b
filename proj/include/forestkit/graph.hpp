#ifndef FORESTKIT_GRAPH_HPP
#define FORESTKIT_GRAPH_HPP

#include "forestkit/matrix.hpp"
#include "forestkit/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace forestkit {

/// Vertices are 0-based here; file formats and the CLI use 1-based numbers.
using Vertex = std::size_t;

struct Arc {
    Vertex tail = 0;
    Vertex head = 0;
    Rational weight{1};
};

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    Rational weight{1};
};

/// Loopless weighted multidigraph. Parallel arcs are kept individually and in
/// input order; immutable once constructed.
class WeightedMultiDigraph {
public:
    /// Throws TooFewVertices, VertexOutOfRange, LoopArc or NonPositiveWeight.
    WeightedMultiDigraph(std::size_t n, std::vector<Arc> arcs);

    std::size_t vertex_count() const noexcept { return n_; }
    std::span<const Arc> arcs() const noexcept { return arcs_; }
    const Arc& arc(std::size_t index) const { return arcs_.at(index); }

    /// Indices into arcs() of the arcs leaving v, in input order.
    std::span<const std::size_t> out_arcs(Vertex v) const;

    std::size_t out_degree(Vertex v) const;
    std::size_t in_degree(Vertex v) const;

    /// Same vertex set, every weight multiplied by t > 0.
    WeightedMultiDigraph scaled(const Rational& t) const;

private:
    void check_vertex(Vertex v) const;

    std::size_t n_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::size_t> in_degree_;
};

/// Replaces each undirected edge {u,v} of weight w by arcs (u,v,w), (v,u,w).
WeightedMultiDigraph from_undirected(std::size_t n, std::span<const Edge> edges);

/// W: entry (i,j) is the summed weight of the parallel arcs i -> j.
DenseMatrix<Rational> total_weight_matrix(const WeightedMultiDigraph& g);

/// L = diag(W 1) - W; every row sums to zero.
DenseMatrix<Rational> laplacian(const WeightedMultiDigraph& g);

template <class T>
DenseMatrix<T> laplacian_as(const WeightedMultiDigraph& g) {
    return matrix_cast<T>(laplacian(g));
}

/// Vertices reachable from `source` along directed paths that never enter
/// `excluded`, in ascending order. `source` itself is always included.
std::vector<Vertex> reachable(const WeightedMultiDigraph& g, Vertex source,
                              std::optional<Vertex> excluded = std::nullopt);

} // namespace forestkit

#endif
