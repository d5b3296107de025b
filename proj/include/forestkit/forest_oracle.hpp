#ifndef FORESTKIT_FOREST_ORACLE_HPP
#define FORESTKIT_FOREST_ORACLE_HPP

#include "forestkit/graph.hpp"
#include "forestkit/matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace forestkit {

inline constexpr std::uint64_t kDefaultOracleCap = 10'000'000;

/// One spanning converging forest. choice[v] is the index (into
/// WeightedMultiDigraph::arcs()) of v's single outgoing forest arc, or empty
/// when v is a root.
struct InForest {
    std::vector<std::optional<std::size_t>> choice;
    std::vector<Vertex> root;
    Rational weight{1};

    bool is_root(Vertex v) const { return !choice[v].has_value(); }
    std::size_t arc_count() const;
};

/// Streams every in-forest of a graph exactly once by walking all per-vertex
/// choice vectors over {root} + out-arcs and discarding the cyclic ones.
/// Parallel arcs give distinct forests. The arcless forest comes first.
class InForestEnumerator {
public:
    /// Throws InstanceTooLarge if the product of (outdegree + 1) exceeds cap.
    explicit InForestEnumerator(const WeightedMultiDigraph& g, std::uint64_t cap = kDefaultOracleCap);

    std::optional<InForest> next();

    /// Number of choice vectors the enumeration walks.
    std::uint64_t candidate_count() const noexcept { return candidates_; }

private:
    bool advance();
    std::optional<InForest> materialize() const;

    const WeightedMultiDigraph* g_;
    std::vector<std::size_t> digit_;
    std::uint64_t candidates_ = 1;
    bool exhausted_ = false;
};

std::vector<InForest> enumerate_in_forests(const WeightedMultiDigraph& g, std::uint64_t cap = kDefaultOracleCap);

struct OracleResult {
    Rational f;
    DenseMatrix<Rational> F;
    std::uint64_t forest_count = 0;
};

/// f and F assembled directly from the enumerated forests: f_ij sums the
/// weights of forests in which i lies in the tree rooted at j.
OracleResult oracle_matrices(const WeightedMultiDigraph& g, std::uint64_t cap = kDefaultOracleCap);

} // namespace forestkit

#endif
