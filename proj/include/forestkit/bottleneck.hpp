#ifndef FORESTKIT_BOTTLENECK_HPP
#define FORESTKIT_BOTTLENECK_HPP

#include "forestkit/forest_matrix.hpp"
#include "forestkit/graph.hpp"

#include <array>
#include <span>
#include <vector>

namespace forestkit {

/// Relative tolerance for calling f_ij f_jk == f_ik f_jj in float mode.
inline constexpr double kFloatEqualityTolerance = 1e-9;

/// True iff every directed path from i to k passes through j. Endpoints lie
/// on every path, so j in {i, k} gives true; for i == k the only candidate
/// is the zero-length path, which contains i alone.
bool is_bottleneck(const WeightedMultiDigraph& g, Vertex i, Vertex j, Vertex k);

enum class Relation { Equal, StrictlyLess };

std::string_view to_string(Relation r) noexcept;

template <class T>
struct BottleneckReport {
    std::array<Vertex, 3> triple{};
    T lhs;  ///< f_ij f_jk
    T rhs;  ///< f_ik f_jj
    Relation relation = Relation::StrictlyLess;
    bool separator = false;
    bool consistent = false;
    bool degenerate = false;

    friend bool operator==(const BottleneckReport&, const BottleneckReport&) = default;
};

/// Compares f_ij f_jk with f_ik f_jj and the separator predicate. In exact
/// mode a violated inequality or a verdict that disagrees with the separator
/// throws InconsistentWithTheorem; in float mode the report carries
/// consistent = false instead.
template <class T>
BottleneckReport<T> check_triple(const ForestMatrices<T>& fm, const WeightedMultiDigraph& g, Vertex i, Vertex j,
                                 Vertex k);

struct TripleSummary {
    std::size_t triples = 0;
    std::size_t equal = 0;
    std::size_t strict = 0;
    std::size_t degenerate = 0;
    std::size_t inconsistent = 0;
};

template <class T>
TripleSummary summarize(std::span<const BottleneckReport<T>> reports);

/// Reports for all n^3 ordered triples (i, j, k), in lexicographic order.
template <class T = Rational>
std::vector<BottleneckReport<T>> verify_all_triples(const WeightedMultiDigraph& g);

/// Builds the doubled digraph, sweeps all triples, and checks that F is
/// symmetric and that the separator predicate is symmetric in i and k.
/// Throws InconsistentWithTheorem on any violation.
std::vector<BottleneckReport<Rational>> verify_undirected(std::size_t n, std::span<const Edge> edges);

extern template BottleneckReport<Rational> check_triple(const ForestMatrices<Rational>&, const WeightedMultiDigraph&,
                                                        Vertex, Vertex, Vertex);
extern template BottleneckReport<double> check_triple(const ForestMatrices<double>&, const WeightedMultiDigraph&,
                                                      Vertex, Vertex, Vertex);
extern template std::vector<BottleneckReport<Rational>> verify_all_triples(const WeightedMultiDigraph&);
extern template std::vector<BottleneckReport<double>> verify_all_triples(const WeightedMultiDigraph&);
extern template TripleSummary summarize(std::span<const BottleneckReport<Rational>>);
extern template TripleSummary summarize(std::span<const BottleneckReport<double>>);

} // namespace forestkit

#endif
