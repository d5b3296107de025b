// Shared fixtures and test-only oracles.
#ifndef FORESTKIT_TESTS_FIXTURES_HPP
#define FORESTKIT_TESTS_FIXTURES_HPP

#include "forestkit/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace fixtures {

using forestkit::Arc;
using forestkit::DenseMatrix;
using forestkit::Edge;
using forestkit::Rational;
using forestkit::WeightedMultiDigraph;

inline Rational q(long p, long d = 1) {
    Rational r(p, d);
    r.canonicalize();
    return r;
}

/// 1 -> 2 (a), 2 -> 3 (b).
inline WeightedMultiDigraph path(const Rational& a = 1, const Rational& b = 1) {
    return WeightedMultiDigraph(3, {{0, 1, a}, {1, 2, b}});
}

/// 1 -> 2, 2 -> 3, 1 -> 3, unit weights.
inline WeightedMultiDigraph triangle() {
    return WeightedMultiDigraph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
}

inline WeightedMultiDigraph cycle(std::size_t n) {
    std::vector<Arc> arcs;
    for (std::size_t v = 0; v < n; ++v)
        arcs.push_back({v, (v + 1) % n, 1});
    return WeightedMultiDigraph(n, arcs);
}

inline WeightedMultiDigraph complete(std::size_t n) {
    std::vector<Arc> arcs;
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t h = 0; h < n; ++h)
            if (t != h)
                arcs.push_back({t, h, 1});
    return WeightedMultiDigraph(n, arcs);
}

inline WeightedMultiDigraph empty(std::size_t n) { return WeightedMultiDigraph(n, {}); }

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    return lo + rng() % (hi - lo + 1);
}

/// Random multidigraph: n in [2, max_n], up to max_arcs arcs (parallel arcs
/// allowed), weights p/q with p, q in 1..5.
inline WeightedMultiDigraph random_multigraph(std::mt19937_64& rng, std::size_t max_n = 5,
                                              std::size_t max_arcs = 8) {
    const std::size_t n = draw(rng, 2, max_n);
    const std::size_t m = draw(rng, 0, max_arcs);
    std::vector<Arc> arcs;
    for (std::size_t a = 0; a < m; ++a) {
        const std::size_t t = draw(rng, 0, n - 1);
        std::size_t h = draw(rng, 0, n - 2);
        if (h >= t)
            ++h;
        arcs.push_back({t, h, q(static_cast<long>(draw(rng, 1, 5)), static_cast<long>(draw(rng, 1, 5)))});
    }
    return WeightedMultiDigraph(n, arcs);
}

inline std::vector<WeightedMultiDigraph> random_corpus(std::size_t count, std::uint64_t seed = 20240601,
                                                       std::size_t max_n = 5) {
    std::mt19937_64 rng(seed);
    std::vector<WeightedMultiDigraph> out;
    out.reserve(count);
    for (std::size_t c = 0; c < count; ++c)
        out.push_back(random_multigraph(rng, max_n));
    return out;
}

struct UndirectedInstance {
    std::size_t n;
    std::vector<Edge> edges;
};

inline std::vector<UndirectedInstance> random_undirected_corpus(std::size_t count, std::uint64_t seed = 77) {
    std::mt19937_64 rng(seed);
    std::vector<UndirectedInstance> out;
    for (std::size_t c = 0; c < count; ++c) {
        UndirectedInstance inst{draw(rng, 2, 5), {}};
        const std::size_t m = draw(rng, 0, 5);
        for (std::size_t e = 0; e < m; ++e) {
            const std::size_t u = draw(rng, 0, inst.n - 1);
            std::size_t v = draw(rng, 0, inst.n - 2);
            if (v >= u)
                ++v;
            inst.edges.push_back({u, v, q(static_cast<long>(draw(rng, 1, 5)), static_cast<long>(draw(rng, 1, 5)))});
        }
        out.push_back(std::move(inst));
    }
    return out;
}

/// Determinant by the Leibniz permutation expansion; independent of the
/// elimination code under test.
inline Rational leibniz_determinant(const DenseMatrix<Rational>& m) {
    const std::size_t n = m.order();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total(0);
    do {
        std::size_t inversions = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (perm[a] > perm[b])
                    ++inversions;
        Rational term(inversions % 2 ? -1 : 1);
        for (std::size_t r = 0; r < n; ++r)
            term *= m(r, perm[r]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline DenseMatrix<Rational> matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    DenseMatrix<Rational> m(rows.size());
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (const auto& x : row)
            m(r, c++) = x;
        ++r;
    }
    return m;
}

} // namespace fixtures

#endif
