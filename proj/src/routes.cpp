#include "forestkit/routes.hpp"

#include "forestkit/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace forestkit {

namespace {

Rational max_diagonal(const DenseMatrix<Rational>& l) {
    Rational best(0);
    for (std::size_t i = 0; i < l.order(); ++i)
        best = std::max(best, l(i, i));
    return best;
}

void require_vertex(const WeightedMultiDigraph& g, Vertex v) {
    if (v >= g.vertex_count())
        throw Error(ErrorCode::VertexOutOfRange,
                    "vertex " + std::to_string(v + 1) + " outside 1.." + std::to_string(g.vertex_count()));
}

struct SeriesEvaluation {
    DenseMatrix<double> R;
    std::size_t terms_used = 0;
    double tail_bound = 0.0;
};

// Sums M^k in doubles for a nonnegative M whose row sums are at most q < 1.
// The bound covers the omitted tail ||M^K||_inf / (1 - q) and the rounding
// of the accumulated products and sums (unit roundoff u, gamma_m = m u /
// (1 - m u)), doubled for second-order terms.
SeriesEvaluation evaluate_series(const DenseMatrix<Rational>& m_exact, const Rational& q_exact, double tolerance,
                                 std::size_t max_terms) {
    const auto m = matrix_cast<double>(m_exact);
    auto series = geometric_series(m, tolerance, max_terms);

    const double q = to_double(q_exact);
    const double one_minus_q = to_double(1 - q_exact);
    const double u = std::numeric_limits<double>::epsilon() / 2;
    auto gamma = [u](double count) { return count * u / (1 - count * u); };
    const double n = static_cast<double>(m.order());
    const double big_k = static_cast<double>(series.terms_used);

    const double truncation = series.first_omitted.inf_norm() / one_minus_q;
    const double term_rounding = gamma(n + 1) * q / (one_minus_q * one_minus_q);
    const double sum_rounding = gamma(big_k + 1) / one_minus_q;
    const double omitted_norm_error = big_k * gamma(n + 1) * std::pow(q, big_k) / one_minus_q;
    const double rounding = 2 * (term_rounding + sum_rounding + omitted_norm_error);

    return {std::move(series.sum), series.terms_used, truncation + rounding};
}

DenseMatrix<Rational> resolvent(const DenseMatrix<Rational>& m) {
    return invert(DenseMatrix<Rational>::identity(m.order()) - m);
}

Vertex shifted_index(Vertex v, Vertex removed) { return v > removed ? v - 1 : v; }

} // namespace

Epsilon Epsilon::checked(const WeightedMultiDigraph& g, Rational value) {
    Epsilon eps(std::move(value));
    if (!eps.valid_for(g))
        throw Error(ErrorCode::EpsilonOutOfRange,
                    "epsilon " + format_rational(eps.value_) + " violates 0 < eps * max l_ii < 1");
    return eps;
}

bool Epsilon::valid_for(const WeightedMultiDigraph& g) const {
    return value_ > 0 && value_ * max_diagonal(laplacian(g)) < 1;
}

Epsilon choose_epsilon(const WeightedMultiDigraph& g) {
    const Rational top = max_diagonal(laplacian(g));
    return Epsilon::checked(g, top > 0 ? Rational(1 / (2 * top)) : Rational(1));
}

DenseMatrix<Rational> stochastic_matrix(const WeightedMultiDigraph& g, const Epsilon& eps) {
    if (!eps.valid_for(g))
        throw Error(ErrorCode::EpsilonOutOfRange,
                    "epsilon " + format_rational(eps.value()) + " violates 0 < eps * max l_ii < 1 for this graph");
    auto p = DenseMatrix<Rational>::identity(g.vertex_count()) - laplacian(g) * eps.value();
    for (const auto& s : p.row_sums())
        if (s != 1)
            throw std::logic_error("I - eps L is not row stochastic");
    return p;
}

DenseMatrix<Rational> loop_augmented_weights(const WeightedMultiDigraph& g, const Epsilon& eps) {
    return stochastic_matrix(g, eps) * eps.damping();
}

RouteMatrices route_matrix(const WeightedMultiDigraph& g, const Epsilon& eps, double tolerance,
                           std::size_t max_terms) {
    auto p = stochastic_matrix(g, eps);
    auto m = p * eps.damping();
    auto series = evaluate_series(m, eps.damping(), tolerance, max_terms);
    return RouteMatrices{eps, std::move(p), std::move(m), std::move(series.R), series.terms_used, series.tail_bound};
}

DenseMatrix<Rational> closed_form_route_matrix(const WeightedMultiDigraph& g, const Epsilon& eps) {
    return resolvent(loop_augmented_weights(g, eps));
}

DenseMatrix<Rational> routes_from_forests(const ForestMatrices<Rational>& fm, const Epsilon& eps) {
    const Rational factor = (1 + 1 / eps.value()) / fm.f;
    return fm.F * factor;
}

Rational proportionality_deviation(const RouteMatrices& routes, const ForestMatrices<Rational>& fm) {
    return (to_exact(routes.R) - routes_from_forests(fm, routes.epsilon)).max_abs();
}

std::vector<Rational> route_weights_by_length(const WeightedMultiDigraph& g, const Epsilon& eps, Vertex i,
                                              unsigned length, std::uint64_t cap) {
    require_vertex(g, i);
    const std::size_t n = g.vertex_count();
    const auto p = stochastic_matrix(g, eps);
    std::vector<Rational> totals(n, Rational(0));
    if (length == 0) {
        totals[i] = 1;
        return totals;
    }
    const Rational damping = eps.damping();
    const Rational arc_scale = eps.value() * damping;

    // Outgoing steps of the loop-augmented graph: the loop first, then each
    // original arc individually.
    struct Step {
        Vertex to;
        Rational weight;
    };
    std::vector<std::vector<Step>> steps(n);
    for (Vertex v = 0; v < n; ++v) {
        steps[v].push_back({v, p(v, v) * damping});
        for (std::size_t a : g.out_arcs(v))
            steps[v].push_back({g.arc(a).head, g.arc(a).weight * arc_scale});
    }

    std::uint64_t routes = 0;
    std::vector<std::size_t> pick{0};
    std::vector<Vertex> at{i};
    std::vector<Rational> weight{Rational(1)};

    // Iterative depth-first walk over all arc sequences of the given length.
    while (!pick.empty()) {
        const std::size_t depth = pick.size() - 1;
        const Vertex here = at[depth];
        if (pick[depth] == steps[here].size()) {
            pick.pop_back();
            at.pop_back();
            weight.pop_back();
            if (!pick.empty())
                ++pick.back();
            continue;
        }
        const Step& s = steps[here][pick[depth]];
        Rational w = weight[depth] * s.weight;
        if (depth + 1 == length) {
            if (++routes > cap)
                throw Error(ErrorCode::InstanceTooLarge,
                            "route enumeration exceeds cap of " + std::to_string(cap) + " routes");
            totals[s.to] += w;
            ++pick.back();
        } else {
            at.push_back(s.to);
            weight.push_back(std::move(w));
            pick.push_back(0);
        }
    }
    return totals;
}

Rational route_weight_by_length(const WeightedMultiDigraph& g, const Epsilon& eps, Vertex i, Vertex j,
                                unsigned length, std::uint64_t cap) {
    require_vertex(g, j);
    return route_weights_by_length(g, eps, i, length, cap)[j];
}

RouteDecomposition<Rational> route_decomposition(const WeightedMultiDigraph& g, const Epsilon& eps, Vertex i,
                                                 Vertex j, Vertex k) {
    require_vertex(g, i);
    require_vertex(g, j);
    require_vertex(g, k);
    const auto m = loop_augmented_weights(g, eps);
    const auto r = resolvent(m);

    RouteDecomposition<Rational> d;
    d.i = i;
    d.j = j;
    d.k = k;
    d.r_ij = r(i, j);
    d.r_jj = r(j, j);
    d.r_jk = r(j, k);
    d.r_ik = r(i, k);
    d.degenerate = j == i || j == k || i == k;
    // Routes of the loop-augmented graph that avoid j are exactly the routes
    // of its principal submatrix without j; the remaining loops keep their
    // original weights.
    if (j == i || j == k)
        d.r_i_avoid_j_k = 0;
    else
        d.r_i_avoid_j_k = resolvent(m.without(j))(shifted_index(i, j), shifted_index(k, j));
    d.r_i_via_j_k = d.r_ik - d.r_i_avoid_j_k;
    d.r_ij_first = d.r_ij / d.r_jj;
    return d;
}

RouteDecomposition<double> route_decomposition_series(const WeightedMultiDigraph& g, const Epsilon& eps,
                                                      Vertex i, Vertex j, Vertex k, double tolerance,
                                                      std::size_t max_terms) {
    require_vertex(g, i);
    require_vertex(g, j);
    require_vertex(g, k);
    const auto m = loop_augmented_weights(g, eps);
    const auto full = evaluate_series(m, eps.damping(), tolerance, max_terms);

    RouteDecomposition<double> d;
    d.i = i;
    d.j = j;
    d.k = k;
    d.r_ij = full.R(i, j);
    d.r_jj = full.R(j, j);
    d.r_jk = full.R(j, k);
    d.r_ik = full.R(i, k);
    d.degenerate = j == i || j == k || i == k;
    double delta = full.tail_bound;
    if (j == i || j == k) {
        d.r_i_avoid_j_k = 0.0;
    } else {
        const auto avoid = evaluate_series(m.without(j), eps.damping(), tolerance, max_terms);
        d.r_i_avoid_j_k = avoid.R(shifted_index(i, j), shifted_index(k, j));
        delta += avoid.tail_bound;
    }
    d.r_i_via_j_k = d.r_ik - d.r_i_avoid_j_k;
    d.r_ij_first = d.r_ij / d.r_jj;
    // r_jj >= 1, so each derived quantity and product moves by at most
    // delta times a factor bounded by (1 + max R)^2.
    const double scale = 1.0 + full.R.max_abs();
    d.tolerance = 4.0 * delta * scale * scale;
    return d;
}

} // namespace forestkit
