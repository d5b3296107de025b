#include "forestkit/forest_oracle.hpp"

#include "forestkit/error.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace forestkit {

std::size_t InForest::arc_count() const {
    return static_cast<std::size_t>(
        std::count_if(choice.begin(), choice.end(), [](const auto& c) { return c.has_value(); }));
}

InForestEnumerator::InForestEnumerator(const WeightedMultiDigraph& g, std::uint64_t cap)
    : g_(&g), digit_(g.vertex_count(), 0) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const std::uint64_t radix = g.out_degree(v) + 1;
        if (candidates_ > cap / radix)
            throw Error(ErrorCode::InstanceTooLarge,
                        "forest enumeration exceeds cap of " + std::to_string(cap) + " choice vectors");
        candidates_ *= radix;
    }
    if (candidates_ > cap)
        throw Error(ErrorCode::InstanceTooLarge,
                    "forest enumeration exceeds cap of " + std::to_string(cap) + " choice vectors");
}

bool InForestEnumerator::advance() {
    for (Vertex v = 0; v < digit_.size(); ++v) {
        if (digit_[v] < g_->out_degree(v)) {
            ++digit_[v];
            return true;
        }
        digit_[v] = 0;
    }
    return false;
}

std::optional<InForest> InForestEnumerator::materialize() const {
    const std::size_t n = digit_.size();
    InForest forest;
    forest.choice.assign(n, std::nullopt);
    std::vector<Vertex> next(n);
    for (Vertex v = 0; v < n; ++v) {
        if (digit_[v] == 0) {
            next[v] = v;
        } else {
            const std::size_t a = g_->out_arcs(v)[digit_[v] - 1];
            forest.choice[v] = a;
            next[v] = g_->arc(a).head;
            forest.weight *= g_->arc(a).weight;
        }
    }

    // 0 = unvisited, 1 = on the current successor chain, 2 = root known.
    std::vector<unsigned char> state(n, 0);
    forest.root.assign(n, 0);
    std::vector<Vertex> chain;
    for (Vertex start = 0; start < n; ++start) {
        chain.clear();
        Vertex v = start;
        while (state[v] == 0 && next[v] != v) {
            state[v] = 1;
            chain.push_back(v);
            v = next[v];
        }
        if (state[v] == 1)
            return std::nullopt;
        const Vertex root = state[v] == 2 ? forest.root[v] : v;
        state[v] = 2;
        forest.root[v] = root;
        for (Vertex c : chain) {
            state[c] = 2;
            forest.root[c] = root;
        }
    }
    return forest;
}

std::optional<InForest> InForestEnumerator::next() {
    while (!exhausted_) {
        auto forest = materialize();
        exhausted_ = !advance();
        if (forest)
            return forest;
    }
    return std::nullopt;
}

std::vector<InForest> enumerate_in_forests(const WeightedMultiDigraph& g, std::uint64_t cap) {
    InForestEnumerator it(g, cap);
    std::vector<InForest> out;
    while (auto forest = it.next())
        out.push_back(std::move(*forest));
    return out;
}

OracleResult oracle_matrices(const WeightedMultiDigraph& g, std::uint64_t cap) {
    const std::size_t n = g.vertex_count();
    OracleResult result{Rational(0), DenseMatrix<Rational>(n), 0};
    InForestEnumerator it(g, cap);
    while (auto forest = it.next()) {
        result.f += forest->weight;
        for (Vertex i = 0; i < n; ++i)
            result.F(i, forest->root[i]) += forest->weight;
        ++result.forest_count;
    }
    return result;
}

} // namespace forestkit
