#include "forestkit/bottleneck.hpp"
#include "forestkit/error.hpp"
#include "forestkit/forest_oracle.hpp"
#include "forestkit/routes.hpp"
#include "support/fixtures.hpp"

#include <doctest.h>

using namespace forestkit;
using fixtures::q;

TEST_CASE("is_bottleneck examples and conventions") {
    CHECK(is_bottleneck(fixtures::path(), 0, 1, 2));
    CHECK_FALSE(is_bottleneck(fixtures::triangle(), 0, 1, 2));
    // 3 reaches nothing: vacuous for any middle vertex.
    CHECK(is_bottleneck(fixtures::triangle(), 2, 1, 0));
    CHECK(is_bottleneck(fixtures::triangle(), 2, 0, 1));
    // Endpoints lie on every path; i == k only admits the zero-length path.
    CHECK(is_bottleneck(fixtures::triangle(), 0, 0, 2));
    CHECK(is_bottleneck(fixtures::triangle(), 0, 2, 2));
    CHECK(is_bottleneck(fixtures::cycle(3), 1, 1, 1));
    CHECK_FALSE(is_bottleneck(fixtures::cycle(3), 1, 0, 1));
    CHECK_THROWS_AS(is_bottleneck(fixtures::path(), 0, 3, 1), Error);
}

TEST_CASE("check_triple examples") {
    const auto path = fixtures::path();
    const auto pr = check_triple(forest_matrices<Rational>(path), path, 0, 1, 2);
    CHECK(pr.lhs == 2);
    CHECK(pr.rhs == 2);
    CHECK(pr.relation == Relation::Equal);
    CHECK(pr.separator);
    CHECK(pr.consistent);
    CHECK_FALSE(pr.degenerate);

    const auto tri = fixtures::triangle();
    const auto tr = check_triple(forest_matrices<Rational>(tri), tri, 0, 1, 2);
    CHECK(tr.lhs == 3);
    CHECK(tr.rhs == 9);
    CHECK(tr.relation == Relation::StrictlyLess);
    CHECK_FALSE(tr.separator);
    CHECK(tr.consistent);

    const auto empty = fixtures::empty(3);
    const auto er = check_triple(forest_matrices<Rational>(empty), empty, 0, 1, 2);
    CHECK(er.lhs == 0);
    CHECK(er.rhs == 0);
    CHECK(er.relation == Relation::Equal);
    CHECK(er.separator);

    const auto fr = check_triple(forest_matrices<double>(tri), tri, 0, 1, 2);
    CHECK(fr.relation == Relation::StrictlyLess);
    CHECK(fr.consistent);
}

TEST_CASE("check_triple flags a verdict that disagrees with the separator") {
    // Forest matrices of the triangle paired with the path graph: for
    // (1,2,3) the numbers say strict while the path says separator.
    const auto fm = forest_matrices<Rational>(fixtures::triangle());
    try {
        check_triple(fm, fixtures::path(), 0, 1, 2);
        FAIL("expected InconsistentWithTheorem");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InconsistentWithTheorem);
    }
    const auto ff = forest_matrices<double>(fixtures::triangle());
    CHECK_FALSE(check_triple(ff, fixtures::path(), 0, 1, 2).consistent);
}

TEST_CASE("verify_all_triples on fixtures") {
    const auto empty = verify_all_triples(fixtures::empty(3));
    CHECK(empty.size() == 27);
    CHECK(summarize<Rational>(empty).inconsistent == 0);

    const auto path = verify_all_triples(fixtures::path());
    CHECK(path[0 * 9 + 1 * 3 + 2].relation == Relation::Equal);
    const auto& r132 = path[0 * 9 + 2 * 3 + 1];
    CHECK(r132.lhs == 0);  // f_32 = 0: 3 is always a root
    CHECK(r132.consistent);

    // Oracle-derived classification of the unit triangle: strict for the six
    // (i, j, i) with j != i and for (1,2,3), (1,3,2), (2,1,3).
    const auto tri = verify_all_triples(fixtures::triangle());
    const auto s = summarize<Rational>(tri);
    CHECK(s.triples == 27);
    CHECK(s.equal == 18);
    CHECK(s.strict == 9);
    CHECK(s.degenerate == 21);
    CHECK(s.inconsistent == 0);
    for (const auto& r : tri)
        CHECK((r.relation == Relation::Equal) == is_bottleneck(fixtures::triangle(), r.triple[0], r.triple[1], r.triple[2]));
}

TEST_CASE("theorem holds on random multigraphs, cross-checked against the oracle F") {
    for (const auto& g : fixtures::random_corpus(60, 101)) {
        const auto reports = verify_all_triples(g);
        const auto oracle = oracle_matrices(g);
        for (const auto& r : reports) {
            const auto [i, j, k] = r.triple;
            CHECK(r.lhs == oracle.F(i, j) * oracle.F(j, k));
            CHECK(r.rhs == oracle.F(i, k) * oracle.F(j, j));
            CHECK(r.lhs <= r.rhs);
            CHECK(r.consistent);
        }
        const auto floats = verify_all_triples<double>(g);
        for (std::size_t t = 0; t < reports.size(); ++t)
            CHECK(floats[t].relation == reports[t].relation);
    }
}

TEST_CASE("verdicts are invariant under uniform weight scaling") {
    for (const auto& g : fixtures::random_corpus(30, 111)) {
        const auto base = verify_all_triples(g);
        for (const auto t : {q(2), q(1, 3)}) {
            const auto scaled = verify_all_triples(g.scaled(t));
            for (std::size_t r = 0; r < base.size(); ++r)
                CHECK(scaled[r].relation == base[r].relation);
        }
    }
}

TEST_CASE("forest-based and route-based verdicts agree") {
    for (const auto& g : fixtures::random_corpus(20, 121)) {
        const auto eps = choose_epsilon(g);
        for (const auto& r : verify_all_triples(g)) {
            const auto [i, j, k] = r.triple;
            const auto d = route_decomposition(g, eps, i, j, k);
            CHECK(d.product_equality() == (r.relation == Relation::Equal));
        }
    }
}

TEST_CASE("verify_undirected examples") {
    const std::vector<Edge> path{{0, 1, 1}, {1, 2, 1}};
    const auto pr = verify_undirected(3, path);
    CHECK(pr[0 * 9 + 1 * 3 + 2].relation == Relation::Equal);

    const std::vector<Edge> tri{{0, 1, 1}, {1, 2, 1}, {0, 2, 1}};
    const auto tr = verify_undirected(3, tri);
    CHECK(tr[0 * 9 + 1 * 3 + 2].relation == Relation::StrictlyLess);

    const std::vector<Edge> single{{0, 1, q(5, 2)}};
    const auto sr = verify_undirected(2, single);
    CHECK(sr.size() == 8);
    for (const auto& r : sr) {
        CHECK(r.consistent);
        CHECK(r.degenerate);
    }
}

TEST_CASE("verify_undirected matches the doubled digraph") {
    for (const auto& inst : fixtures::random_undirected_corpus(20, 131)) {
        CHECK(verify_undirected(inst.n, inst.edges) == verify_all_triples(from_undirected(inst.n, inst.edges)));
    }
}
