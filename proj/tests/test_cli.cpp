#include "forestkit/cli.hpp"
#include "forestkit/error.hpp"
#include "forestkit/forest_matrix.hpp"
#include "forestkit/generate.hpp"
#include "forestkit/graph_io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace forestkit;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(FORESTKIT_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

} // namespace

TEST_CASE("graph text parsing") {
    const auto file = parse_graph_text("# comment\n\ndigraph 3\n1 2 0.5\n# mid\n2 3 3/6\r\n");
    CHECK(file.directed);
    CHECK(file.n == 3);
    REQUIRE(file.arcs.size() == 2);
    CHECK(file.arcs[0].weight == Rational(1, 2));
    CHECK(file.arcs[1].tail == 1);

    const auto undirected = parse_graph_text("graph 2\n1 2 4\n").to_graph();
    CHECK(undirected.arcs().size() == 2);

    auto code = [](const char* text) {
        try {
            parse_graph_text(text).to_graph();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::BadParameters;
    };
    CHECK(code("") == ErrorCode::ParseError);
    CHECK(code("tree 3\n") == ErrorCode::ParseError);
    CHECK(code("digraph 3\n1 2\n") == ErrorCode::ParseError);
    CHECK(code("digraph 3\n1 2 x\n") == ErrorCode::ParseError);
    CHECK(code("digraph 3\n0 2 1\n") == ErrorCode::VertexOutOfRange);
    CHECK(code("digraph 3\n1 4 1\n") == ErrorCode::VertexOutOfRange);
    CHECK(code("digraph 3\n2 2 1\n") == ErrorCode::LoopArc);
    CHECK(code("digraph 3\n1 2 0\n") == ErrorCode::NonPositiveWeight);
    CHECK(code("digraph 1\n") == ErrorCode::TooFewVertices);
}

TEST_CASE("graph JSON parsing") {
    const auto file = parse_graph(R"({"n": 3, "directed": true, "arcs": [[1, 2, "2/3"], [3, 1, 4]]})");
    CHECK(file.directed);
    REQUIRE(file.arcs.size() == 2);
    CHECK(file.arcs[0].weight == Rational(2, 3));
    CHECK(file.arcs[1].weight == 4);
    CHECK_THROWS_AS(parse_graph(R"({"n": 3, "arcs": [[1, 2, 0.5]]})"), Error);
    CHECK_THROWS_AS(parse_graph(R"({"n": 3})"), Error);
    CHECK_THROWS_AS(parse_graph("{not json"), Error);
}

TEST_CASE("emitting a parsed graph is canonical and idempotent") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto file = generate(GenKind::Random, 2 + seed % 5, seed, WeightRange{1, 5});
        // Canonical text must not depend on input arc order.
        std::reverse(file.arcs.begin(), file.arcs.end());
        const auto once = emit_graph_text(file);
        CHECK(emit_graph_text(parse_graph_text(once)) == once);
    }
    const auto text = emit_graph_text(parse_graph_text("graph 3\n2 3 2/4\n1 2 1\n1 2 0.25\n"));
    CHECK(text == "graph 3\n1 2 1\n1 2 1/4\n2 3 1/2\n");
}

TEST_CASE("gen command") {
    CHECK(run({"gen", "path", "3", "--weights", "1"}).out == "digraph 3\n1 2 1\n2 3 1\n");
    const auto a = run({"gen", "random", "4", "--seed", "7"});
    const auto b = run({"gen", "random", "4", "--seed", "7"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto complete = parse_graph_text(run({"gen", "complete", "3", "--weights", "1"}).out);
    CHECK(complete.arcs.size() == 6);
    for (const auto& arc : complete.arcs)
        CHECK(arc.weight == 1);
    CHECK(run({"gen", "cycle", "1"}).code == kExitInputError);
    CHECK(run({"gen", "star", "3"}).err.rfind("error:BadParameters:", 0) == 0);
    CHECK(run({"gen", "path", "3", "--weights", "3..2"}).code == kExitInputError);
}

TEST_CASE("forest command, text and JSON") {
    const auto tsv = run({"forest", "--input", data("path.graph"), "--mode", "exact", "--format", "tsv"});
    CHECK(tsv.code == 0);
    CHECK(tsv.out == slurp(data("path.forest.golden")));

    const auto json = run({"forest", "--input", data("triangle.graph"), "--format", "json"});
    const auto doc = nlohmann::json::parse(json.out);
    const auto fm = forest_matrices<Rational>(parse_graph(slurp(data("triangle.graph"))).to_graph());
    CHECK(parse_rational(doc["f"].get<std::string>()) == fm.f);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(parse_rational(doc["F"][i][j].get<std::string>()) == fm.F(i, j));
            CHECK(parse_rational(doc["Q"][i][j].get<std::string>()) == fm.Q(i, j));
        }

    const auto stdin_run = run({"forest", "--input", "-"}, slurp(data("path.graph")));
    CHECK(stdin_run.out == tsv.out);
    CHECK(run({"proximity", "--input", data("path.graph")}).out == "1/2\t1/4\t1/4\n0\t1/2\t1/2\n0\t0\t1\n");
}

TEST_CASE("bottleneck and verify commands") {
    const auto b = run({"bottleneck", "--input", data("path.graph"), "-i", "1", "-j", "2", "-k", "3"});
    CHECK(b.code == 0);
    CHECK(b.out == "equal separator=true lhs=2 rhs=2\n");
    const auto s = run({"bottleneck", "--input", data("triangle.graph"), "-i", "1", "-j", "2", "-k", "3"});
    CHECK(s.out == "strict separator=false lhs=3 rhs=9\n");
    CHECK(run({"bottleneck", "--input", data("path.graph"), "-i", "1", "-j", "1", "-k", "3"}).out ==
          "equal separator=true lhs=2 rhs=2 degenerate=true\n");
    CHECK(run({"bottleneck", "--input", data("path.graph"), "-i", "1", "-j", "9", "-k", "3"}).code ==
          kExitInputError);

    const auto v = run({"verify", "--input", data("triangle.graph")});
    CHECK(v.code == 0);
    CHECK(v.out == slurp(data("triangle.verify.golden")));
    CHECK(run({"verify", "--input", data("triangle.graph"), "--mode", "float"}).out ==
          "triples=27 equal=18 strict=9 inconsistent=0 degenerate=21 oracle=skipped\n");

    const auto u = run({"verify", "--input", data("undirected_path.json")});
    CHECK(u.code == 0);
    CHECK(u.out.rfind("triples=27 equal=17 strict=10 inconsistent=0", 0) == 0);
    CHECK(run({"verify", "--undirected"}, slurp(data("path.graph"))).out == u.out);
}

TEST_CASE("enumerate, routes and decompose commands") {
    const auto e = run({"enumerate", "--input", data("triangle.graph")});
    CHECK(e.code == 0);
    CHECK(e.out.find("# forests=6 f=6\n") != std::string::npos);
    CHECK(e.out.rfind("root root root\t1\n", 0) == 0);

    const auto r = run({"routes", "--input", data("triangle.graph"), "--format", "json"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["epsilon"] == "1/4");
    CHECK(std::stod(doc["deviation"].get<std::string>()) <= std::stod(doc["tail_bound"].get<std::string>()));
    CHECK(run({"routes", "--input", data("triangle.graph"), "--epsilon", "1/8"}).out.rfind("# epsilon=1/8 ", 0) == 0);

    const auto d = run({"decompose", "--input", data("triangle.graph"), "-i", "1", "-j", "2", "-k", "3"});
    CHECK(d.out.find("r_i_avoid_j_k=5/3") != std::string::npos);
    CHECK(d.out.find("relation=strict") != std::string::npos);
    CHECK(d.out.find("fails") == std::string::npos);
}

TEST_CASE("error reporting and exit codes") {
    const auto missing = run({"forest", "--input", "/nonexistent/graph"});
    CHECK(missing.code == kExitInputError);
    CHECK(missing.err.rfind("error:ParseError:", 0) == 0);

    CHECK(run({"forest", "--unknown"}).code == kExitInputError);
    CHECK(run({}).code == kExitInputError);
    CHECK(run({"forest", "--mode", "fuzzy"}, "digraph 2\n").code == kExitInputError);

    const auto eps = run({"routes", "--input", data("triangle.graph"), "--epsilon", "1/2"});
    CHECK(eps.code == kExitInputError);
    CHECK(eps.err.rfind("error:EpsilonOutOfRange:", 0) == 0);

    const auto slow = run({"routes", "--input", data("triangle.graph"), "--max-terms", "3"});
    CHECK(slow.code == kExitLimit);
    CHECK(slow.err.rfind("error:NotConverged:", 0) == 0);

    const auto loop = run({"forest"}, "digraph 2\n1 1 1\n");
    CHECK(loop.err.rfind("error:LoopArc:", 0) == 0);

    ::setenv("FOREST_ORACLE_CAP", "4", 1);
    const auto capped = run({"enumerate", "--input", data("triangle.graph")});
    const auto skipped = run({"verify", "--input", data("triangle.graph")});
    ::unsetenv("FOREST_ORACLE_CAP");
    CHECK(capped.code == kExitLimit);
    CHECK(capped.err.rfind("error:InstanceTooLarge:", 0) == 0);
    CHECK(skipped.code == 0);
    CHECK(skipped.out.find("oracle=skipped") != std::string::npos);
}
