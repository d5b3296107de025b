#ifndef FORESTKIT_ROUTES_HPP
#define FORESTKIT_ROUTES_HPP

#include "forestkit/forest_matrix.hpp"
#include "forestkit/graph.hpp"
#include "forestkit/matrix.hpp"

#include <cstdint>

namespace forestkit {

inline constexpr double kDefaultSeriesTolerance = 1e-12;
inline constexpr std::size_t kDefaultMaxTerms = 100'000;
inline constexpr std::uint64_t kDefaultRouteCap = 1'000'000;

/// Step parameter of the stochastic matrix P = I - eps L. A value is only
/// meaningful relative to a graph: 0 < eps * max_i l_ii < 1 must hold for it.
class Epsilon {
public:
    /// Throws EpsilonOutOfRange unless eps > 0 and eps * max_i l_ii < 1.
    static Epsilon checked(const WeightedMultiDigraph& g, Rational value);

    const Rational& value() const noexcept { return value_; }
    /// Ratio q = 1 / (1 + eps) by which every step of a route is damped.
    Rational damping() const { return Rational(1) / (1 + value_); }

    bool valid_for(const WeightedMultiDigraph& g) const;

private:
    explicit Epsilon(Rational value) : value_(std::move(value)) {}
    Rational value_;
};

/// eps = 1 / (2 max_i l_ii), or 1 for an arcless graph.
Epsilon choose_epsilon(const WeightedMultiDigraph& g);

/// P = I - eps L; row stochastic. Throws EpsilonOutOfRange if eps does not
/// fit this graph.
DenseMatrix<Rational> stochastic_matrix(const WeightedMultiDigraph& g, const Epsilon& eps);

/// Total arc weights of the loop-augmented graph: M = P / (1 + eps). Vertex i
/// carries a loop of weight p_ii / (1 + eps); every original arc keeps its
/// endpoints with weight scaled by eps / (1 + eps).
DenseMatrix<Rational> loop_augmented_weights(const WeightedMultiDigraph& g, const Epsilon& eps);

struct RouteMatrices {
    Epsilon epsilon;
    DenseMatrix<Rational> P;
    DenseMatrix<Rational> M;
    /// Total route weights, truncated series evaluated in double precision.
    DenseMatrix<double> R;
    std::size_t terms_used = 0;
    /// Bound on max |R - exact route weights|: geometric tail plus a
    /// rounding allowance for the double-precision accumulation.
    double tail_bound = 0.0;
};

/// R = sum_k M^k, truncated once max|M^K| < tolerance.
RouteMatrices route_matrix(const WeightedMultiDigraph& g, const Epsilon& eps,
                           double tolerance = kDefaultSeriesTolerance, std::size_t max_terms = kDefaultMaxTerms);

/// Exact route weights (I - M)^-1.
DenseMatrix<Rational> closed_form_route_matrix(const WeightedMultiDigraph& g, const Epsilon& eps);

/// (1 + 1/eps) F / f, the route weights predicted by the forest matrices.
DenseMatrix<Rational> routes_from_forests(const ForestMatrices<Rational>& fm, const Epsilon& eps);

/// Exact max |R - (1 + 1/eps) F / f| for a series result.
Rational proportionality_deviation(const RouteMatrices& routes, const ForestMatrices<Rational>& fm);

/// Sum of the weights of all i -> j routes of exactly `length` arcs in the
/// loop-augmented graph, by explicit enumeration of arc sequences (parallel
/// arcs distinct). Throws InstanceTooLarge beyond `cap` routes.
Rational route_weight_by_length(const WeightedMultiDigraph& g, const Epsilon& eps, Vertex i, Vertex j,
                                unsigned length, std::uint64_t cap = kDefaultRouteCap);

/// The same enumeration from i, with weights collected for every endpoint.
std::vector<Rational> route_weights_by_length(const WeightedMultiDigraph& g, const Epsilon& eps, Vertex i,
                                              unsigned length, std::uint64_t cap = kDefaultRouteCap);

/// Route weights around the triple (i, j, k), split the way the bottleneck
/// argument splits them.
template <class T>
struct RouteDecomposition {
    Vertex i = 0, j = 0, k = 0;
    T r_ij, r_jj, r_jk, r_ik;
    /// i -> j routes meeting j only at their end: r_ij / r_jj.
    T r_ij_first;
    /// i -> k routes through j: r_ik - r_i_avoid_j_k.
    T r_i_via_j_k;
    /// i -> k routes avoiding j, from the graph with j deleted.
    T r_i_avoid_j_k;
    /// j in {i, k} or i == k.
    bool degenerate = false;
    /// Slack used for the identity checks; zero in exact mode.
    double tolerance = 0.0;

    bool first_passage_identity() const { return close(r_ij, r_ij_first * r_jj); }
    bool split_identity() const { return close(r_ik, r_i_via_j_k + r_i_avoid_j_k); }
    bool through_identity() const { return close(r_i_via_j_k, r_ij_first * r_jk); }
    bool avoiding_routes_vanish() const { return close(r_i_avoid_j_k, T(0)); }
    bool product_equality() const { return close(r_ij * r_jk, r_ik * r_jj); }

private:
    bool close(const T& a, const T& b) const {
        if constexpr (ScalarTraits<T>::exact)
            return a == b;
        else
            return ScalarTraits<T>::abs(a - b) <= tolerance;
    }
};

/// Exact decomposition from closed-form route matrices.
RouteDecomposition<Rational> route_decomposition(const WeightedMultiDigraph& g, const Epsilon& eps, Vertex i,
                                                 Vertex j, Vertex k);

/// Same decomposition from truncated series; identities hold within the
/// combined tail bounds carried in `tolerance`.
RouteDecomposition<double> route_decomposition_series(const WeightedMultiDigraph& g, const Epsilon& eps,
                                                      Vertex i, Vertex j, Vertex k,
                                                      double tolerance = kDefaultSeriesTolerance,
                                                      std::size_t max_terms = kDefaultMaxTerms);

} // namespace forestkit

#endif
