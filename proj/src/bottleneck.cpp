#include "forestkit/bottleneck.hpp"

#include "forestkit/error.hpp"

#include <algorithm>
#include <string>

namespace forestkit {

namespace {

std::string triple_name(Vertex i, Vertex j, Vertex k) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
}

} // namespace

bool is_bottleneck(const WeightedMultiDigraph& g, Vertex i, Vertex j, Vertex k) {
    const std::size_t n = g.vertex_count();
    if (i >= n || j >= n || k >= n)
        throw Error(ErrorCode::VertexOutOfRange, "triple " + triple_name(i, j, k) + " outside 1.." + std::to_string(n));
    if (j == i || j == k)
        return true;
    if (i == k)
        return false;
    const auto seen = reachable(g, i, j);
    return !std::binary_search(seen.begin(), seen.end(), k);
}

std::string_view to_string(Relation r) noexcept {
    return r == Relation::Equal ? "equal" : "strict";
}

template <class T>
BottleneckReport<T> check_triple(const ForestMatrices<T>& fm, const WeightedMultiDigraph& g, Vertex i, Vertex j,
                                 Vertex k) {
    BottleneckReport<T> report;
    report.triple = {i, j, k};
    report.separator = is_bottleneck(g, i, j, k);
    report.lhs = fm.F(i, j) * fm.F(j, k);
    report.rhs = fm.F(i, k) * fm.F(j, j);
    report.degenerate = j == i || j == k || i == k;

    bool ordered = true;
    if constexpr (ScalarTraits<T>::exact) {
        report.relation = report.lhs == report.rhs ? Relation::Equal : Relation::StrictlyLess;
        ordered = report.lhs <= report.rhs;
    } else {
        const double slack = kFloatEqualityTolerance * std::max(1.0, std::fabs(report.rhs));
        report.relation = std::fabs(report.lhs - report.rhs) <= slack ? Relation::Equal : Relation::StrictlyLess;
        ordered = report.lhs <= report.rhs + slack;
    }
    report.consistent = ordered && ((report.relation == Relation::Equal) == report.separator);

    if constexpr (ScalarTraits<T>::exact) {
        if (!report.consistent)
            throw Error(ErrorCode::InconsistentWithTheorem,
                        "triple " + triple_name(i, j, k) + ": lhs=" + format_scalar(report.lhs) +
                            " rhs=" + format_scalar(report.rhs) +
                            " separator=" + (report.separator ? "true" : "false"));
    }
    return report;
}

template <class T>
TripleSummary summarize(std::span<const BottleneckReport<T>> reports) {
    TripleSummary s;
    for (const auto& r : reports) {
        ++s.triples;
        if (r.relation == Relation::Equal)
            ++s.equal;
        else
            ++s.strict;
        if (r.degenerate)
            ++s.degenerate;
        if (!r.consistent)
            ++s.inconsistent;
    }
    return s;
}

template <class T>
std::vector<BottleneckReport<T>> verify_all_triples(const WeightedMultiDigraph& g) {
    const auto fm = forest_matrices<T>(g);
    const std::size_t n = g.vertex_count();
    std::vector<BottleneckReport<T>> reports;
    reports.reserve(n * n * n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j)
            for (Vertex k = 0; k < n; ++k)
                reports.push_back(check_triple(fm, g, i, j, k));
    return reports;
}

std::vector<BottleneckReport<Rational>> verify_undirected(std::size_t n, std::span<const Edge> edges) {
    const auto g = from_undirected(n, edges);
    const auto fm = forest_matrices<Rational>(g);
    if (!fm.F.is_symmetric())
        throw Error(ErrorCode::InconsistentWithTheorem, "in-forest matrix of an undirected graph is not symmetric");

    auto reports = verify_all_triples<Rational>(g);
    // A path in the undirected graph reversed is again a path, so the
    // separator verdict for (i, j, k) and (k, j, i) must coincide.
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j)
            for (Vertex k = 0; k < n; ++k)
                if (reports[(i * n + j) * n + k].separator != reports[(k * n + j) * n + i].separator)
                    throw Error(ErrorCode::InconsistentWithTheorem,
                                "separator predicate not symmetric at " + triple_name(i, j, k));
    return reports;
}

template BottleneckReport<Rational> check_triple(const ForestMatrices<Rational>&, const WeightedMultiDigraph&, Vertex,
                                                 Vertex, Vertex);
template BottleneckReport<double> check_triple(const ForestMatrices<double>&, const WeightedMultiDigraph&, Vertex,
                                               Vertex, Vertex);
template std::vector<BottleneckReport<Rational>> verify_all_triples(const WeightedMultiDigraph&);
template std::vector<BottleneckReport<double>> verify_all_triples(const WeightedMultiDigraph&);
template TripleSummary summarize(std::span<const BottleneckReport<Rational>>);
template TripleSummary summarize(std::span<const BottleneckReport<double>>);

} // namespace forestkit
