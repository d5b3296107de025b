#include "forestkit/cli.hpp"

#include "forestkit/bottleneck.hpp"
#include "forestkit/error.hpp"
#include "forestkit/forest_matrix.hpp"
#include "forestkit/forest_oracle.hpp"
#include "forestkit/generate.hpp"
#include "forestkit/graph_io.hpp"
#include "forestkit/routes.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace forestkit {

namespace {

struct Options {
    std::string input = "-";
    std::string mode;
    std::string epsilon;
    double tolerance = kDefaultSeriesTolerance;
    std::size_t max_terms = kDefaultMaxTerms;
    std::string format = "tsv";
    bool undirected = false;
    std::size_t i = 0, j = 0, k = 0;

    // gen
    std::string kind;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::string weights = "1";
};

struct Session {
    const Options& opt;
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

std::string read_input(const Session& s) {
    if (s.opt.input == "-")
        return {std::istreambuf_iterator<char>(s.in), std::istreambuf_iterator<char>()};
    std::ifstream file(s.opt.input, std::ios::binary);
    if (!file)
        throw Error(ErrorCode::ParseError, "cannot open '" + s.opt.input + "'");
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

GraphFile load_file(const Session& s) {
    auto file = parse_graph(read_input(s));
    if (s.opt.undirected)
        file.directed = false;
    return file;
}

WeightedMultiDigraph load_graph(const Session& s) { return load_file(s).to_graph(); }

ScalarMode resolve_mode(const Options& opt, std::size_t n) {
    if (opt.mode.empty())
        return default_mode(n);
    return opt.mode == "exact" ? ScalarMode::ExactRational : ScalarMode::Float64;
}

std::uint64_t oracle_cap() {
    const char* env = std::getenv("FOREST_ORACLE_CAP");
    if (env == nullptr || *env == '\0')
        return kDefaultOracleCap;
    char* end = nullptr;
    const unsigned long long cap = std::strtoull(env, &end, 10);
    if (*end != '\0')
        throw Error(ErrorCode::BadParameters, "FOREST_ORACLE_CAP must be an unsigned integer");
    return cap;
}

Vertex vertex_arg(std::size_t one_based, const WeightedMultiDigraph& g, const char* flag) {
    if (one_based < 1 || one_based > g.vertex_count())
        throw Error(ErrorCode::VertexOutOfRange, std::string(flag) + " " + std::to_string(one_based) +
                                                     " outside 1.." + std::to_string(g.vertex_count()));
    return one_based - 1;
}

Epsilon resolve_epsilon(const Options& opt, const WeightedMultiDigraph& g) {
    if (opt.epsilon.empty())
        return choose_epsilon(g);
    return Epsilon::checked(g, parse_rational(opt.epsilon));
}

template <class T>
void write_tsv(std::ostream& out, const DenseMatrix<T>& m) {
    for (std::size_t r = 0; r < m.order(); ++r) {
        for (std::size_t c = 0; c < m.order(); ++c)
            out << (c ? "\t" : "") << format_scalar(m(r, c));
        out << '\n';
    }
}

template <class T>
nlohmann::json to_json(const DenseMatrix<T>& m) {
    auto rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.order(); ++r) {
        auto row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.order(); ++c)
            row.push_back(format_scalar(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class T>
int forest_command(const Session& s, const WeightedMultiDigraph& g, bool q_only) {
    const auto fm = forest_matrices<T>(g);
    if (s.opt.format == "json") {
        nlohmann::json doc;
        if (!q_only) {
            doc["f"] = format_scalar(fm.f);
            doc["F"] = to_json(fm.F);
        }
        doc["Q"] = to_json(fm.Q);
        s.out << doc.dump() << '\n';
    } else if (q_only) {
        write_tsv(s.out, fm.Q);
    } else {
        s.out << "# f=" << format_scalar(fm.f) << '\n';
        write_tsv(s.out, fm.F);
    }
    return kExitOk;
}

int run_forest(const Session& s, bool q_only) {
    const auto g = load_graph(s);
    if (resolve_mode(s.opt, g.vertex_count()) == ScalarMode::ExactRational)
        return forest_command<Rational>(s, g, q_only);
    return forest_command<double>(s, g, q_only);
}

int run_enumerate(const Session& s) {
    const auto g = load_graph(s);
    InForestEnumerator it(g, oracle_cap());
    Rational f(0);
    std::uint64_t count = 0;
    while (auto forest = it.next()) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            s.out << (v ? " " : "");
            if (forest->is_root(v))
                s.out << "root";
            else
                s.out << *forest->choice[v] + 1;
        }
        s.out << '\t' << format_rational(forest->weight) << '\n';
        f += forest->weight;
        ++count;
    }
    s.out << "# forests=" << count << " f=" << format_rational(f) << '\n';
    return kExitOk;
}

int run_routes(const Session& s) {
    const auto g = load_graph(s);
    const auto eps = resolve_epsilon(s.opt, g);
    const auto routes = route_matrix(g, eps, s.opt.tolerance, s.opt.max_terms);
    std::optional<double> deviation;
    if (resolve_mode(s.opt, g.vertex_count()) == ScalarMode::ExactRational)
        deviation = to_double(proportionality_deviation(routes, forest_matrices<Rational>(g)));

    if (s.opt.format == "json") {
        nlohmann::json doc;
        doc["epsilon"] = format_rational(eps.value());
        doc["terms_used"] = routes.terms_used;
        doc["tail_bound"] = format_double(routes.tail_bound);
        if (deviation)
            doc["deviation"] = format_double(*deviation);
        doc["R"] = to_json(routes.R);
        s.out << doc.dump() << '\n';
    } else {
        s.out << "# epsilon=" << format_rational(eps.value()) << " terms=" << routes.terms_used
              << " tail_bound=" << format_double(routes.tail_bound);
        if (deviation)
            s.out << " deviation=" << format_double(*deviation);
        s.out << '\n';
        write_tsv(s.out, routes.R);
    }
    return kExitOk;
}

template <class T>
void write_decomposition(const Session& s, const RouteDecomposition<T>& d, const Epsilon& eps) {
    auto verdict = [](bool ok) { return ok ? "holds" : "fails"; };
    s.out << "triple=" << d.i + 1 << ',' << d.j + 1 << ',' << d.k + 1 << " epsilon=" << format_rational(eps.value())
          << '\n';
    s.out << "r_ij=" << format_scalar(d.r_ij) << " r_jj=" << format_scalar(d.r_jj) << " r_jk=" << format_scalar(d.r_jk)
          << " r_ik=" << format_scalar(d.r_ik) << '\n';
    s.out << "r_ij_first=" << format_scalar(d.r_ij_first) << " r_i_via_j_k=" << format_scalar(d.r_i_via_j_k)
          << " r_i_avoid_j_k=" << format_scalar(d.r_i_avoid_j_k) << '\n';
    s.out << "first_passage=" << verdict(d.first_passage_identity()) << " split=" << verdict(d.split_identity())
          << " through=" << verdict(d.through_identity()) << " degenerate=" << (d.degenerate ? "true" : "false")
          << '\n';
    s.out << "relation=" << (d.product_equality() ? "equal" : "strict") << '\n';
}

int run_decompose(const Session& s) {
    const auto g = load_graph(s);
    const auto eps = resolve_epsilon(s.opt, g);
    const Vertex i = vertex_arg(s.opt.i, g, "-i");
    const Vertex j = vertex_arg(s.opt.j, g, "-j");
    const Vertex k = vertex_arg(s.opt.k, g, "-k");
    if (resolve_mode(s.opt, g.vertex_count()) == ScalarMode::ExactRational)
        write_decomposition(s, route_decomposition(g, eps, i, j, k), eps);
    else
        write_decomposition(s, route_decomposition_series(g, eps, i, j, k, s.opt.tolerance, s.opt.max_terms), eps);
    return kExitOk;
}

template <class T>
int bottleneck_command(const Session& s, const WeightedMultiDigraph& g) {
    const Vertex i = vertex_arg(s.opt.i, g, "-i");
    const Vertex j = vertex_arg(s.opt.j, g, "-j");
    const Vertex k = vertex_arg(s.opt.k, g, "-k");
    const auto report = check_triple(forest_matrices<T>(g), g, i, j, k);
    s.out << to_string(report.relation) << " separator=" << (report.separator ? "true" : "false")
          << " lhs=" << format_scalar(report.lhs) << " rhs=" << format_scalar(report.rhs);
    if (report.degenerate)
        s.out << " degenerate=true";
    s.out << '\n';
    if (!report.consistent) {
        s.err << "error:" << to_string(ErrorCode::InconsistentWithTheorem) << ":verdict disagrees with separator\n";
        return kExitInconsistent;
    }
    return kExitOk;
}

int run_bottleneck(const Session& s) {
    const auto g = load_graph(s);
    if (resolve_mode(s.opt, g.vertex_count()) == ScalarMode::ExactRational)
        return bottleneck_command<Rational>(s, g);
    return bottleneck_command<double>(s, g);
}

// "match" when the enumerated forests reproduce det(I + L) and F exactly,
// "skipped" when enumeration is over the cap.
std::string oracle_cross_check(const WeightedMultiDigraph& g) {
    std::optional<OracleResult> oracle;
    try {
        oracle = oracle_matrices(g, oracle_cap());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::InstanceTooLarge)
            return "skipped";
        throw;
    }
    const auto fm = forest_matrices<Rational>(g);
    if (oracle->f != fm.f || !(oracle->F == fm.F))
        throw Error(ErrorCode::InconsistentWithTheorem, "forest enumeration disagrees with det(I+L) and F");
    return "match";
}

int run_verify(const Session& s) {
    const auto file = load_file(s);
    const bool undirected = !file.directed;
    const auto g = file.to_graph();
    const auto mode = resolve_mode(s.opt, g.vertex_count());

    TripleSummary summary;
    std::string oracle = "skipped";
    if (mode == ScalarMode::ExactRational) {
        std::vector<BottleneckReport<Rational>> reports;
        if (undirected) {
            std::vector<Edge> edges;
            for (const auto& a : file.arcs)
                edges.push_back({a.tail, a.head, a.weight});
            reports = verify_undirected(file.n, edges);
        } else {
            reports = verify_all_triples<Rational>(g);
        }
        summary = summarize<Rational>(reports);
        oracle = oracle_cross_check(g);
    } else {
        summary = summarize<double>(verify_all_triples<double>(g));
    }

    s.out << "triples=" << summary.triples << " equal=" << summary.equal << " strict=" << summary.strict
          << " inconsistent=" << summary.inconsistent << " degenerate=" << summary.degenerate << " oracle=" << oracle
          << '\n';
    if (summary.inconsistent != 0) {
        s.err << "error:" << to_string(ErrorCode::InconsistentWithTheorem) << ":" << summary.inconsistent
              << " triples disagree with the separator test\n";
        return kExitInconsistent;
    }
    return kExitOk;
}

int run_gen(const Session& s) {
    const auto file = generate(parse_gen_kind(s.opt.kind), s.opt.n, s.opt.seed, parse_weight_range(s.opt.weights));
    s.out << emit_graph_text(file);
    return kExitOk;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::NotConverged:
    case ErrorCode::InstanceTooLarge:
        return kExitLimit;
    case ErrorCode::InconsistentWithTheorem:
        return kExitInconsistent;
    default:
        return kExitInputError;
    }
}

void add_graph_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--input", opt.input, "graph file, or - for stdin")->capture_default_str();
    cmd->add_option("--mode", opt.mode, "scalar mode (default: exact up to 12 vertices)")
        ->check(CLI::IsMember({"exact", "float"}));
    cmd->add_flag("--undirected", opt.undirected, "read arcs as undirected edges");
}

void add_triple_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("-i", opt.i, "first vertex (1-based)")->required();
    cmd->add_option("-j", opt.j, "middle vertex (1-based)")->required();
    cmd->add_option("-k", opt.k, "last vertex (1-based)")->required();
}

void add_route_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--epsilon", opt.epsilon, "step parameter as a rational (default 1/(2 max l_ii))");
    cmd->add_option("--tol", opt.tolerance, "series truncation tolerance")->capture_default_str();
    cmd->add_option("--max-terms", opt.max_terms, "series term limit")->capture_default_str();
}

void add_format_option(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"tsv", "json"}))
        ->capture_default_str();
}

} // namespace

int run_cli(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Spanning converging forests, route weights and graph bottleneck checks", "forestkit"};
    app.require_subcommand(1, 1);

    auto* forest = app.add_subcommand("forest", "print f and the in-forest matrix F");
    add_graph_options(forest, opt);
    add_format_option(forest, opt);

    auto* prox = app.add_subcommand("proximity", "print Q = (I + L)^-1");
    add_graph_options(prox, opt);
    add_format_option(prox, opt);

    auto* enumerate = app.add_subcommand("enumerate", "list every in-forest with its weight");
    add_graph_options(enumerate, opt);

    auto* routes = app.add_subcommand("routes", "route weights of the loop-augmented graph");
    add_graph_options(routes, opt);
    add_route_options(routes, opt);
    add_format_option(routes, opt);

    auto* decompose = app.add_subcommand("decompose", "route decomposition for one triple");
    add_graph_options(decompose, opt);
    add_route_options(decompose, opt);
    add_triple_options(decompose, opt);

    auto* bottleneck = app.add_subcommand("bottleneck", "compare f_ij f_jk with f_ik f_jj for one triple");
    add_graph_options(bottleneck, opt);
    add_triple_options(bottleneck, opt);

    auto* verify = app.add_subcommand("verify", "check all ordered triples and cross-check the oracle");
    add_graph_options(verify, opt);

    auto* gen = app.add_subcommand("gen", "emit a generated graph file");
    gen->add_option("kind", opt.kind, "path | cycle | complete | random")->required();
    gen->add_option("n", opt.n, "vertex count")->required();
    gen->add_option("--seed", opt.seed, "random seed")->capture_default_str();
    gen->add_option("--weights", opt.weights, "weight bound 'a' or range 'a..b'")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error:" << to_string(ErrorCode::BadParameters) << ":" << e.what() << '\n';
        return kExitInputError;
    }

    const Session s{opt, in, out, err};
    try {
        if (forest->parsed())
            return run_forest(s, false);
        if (prox->parsed())
            return run_forest(s, true);
        if (enumerate->parsed())
            return run_enumerate(s);
        if (routes->parsed())
            return run_routes(s);
        if (decompose->parsed())
            return run_decompose(s);
        if (bottleneck->parsed())
            return run_bottleneck(s);
        if (verify->parsed())
            return run_verify(s);
        return run_gen(s);
    } catch (const Error& e) {
        err << "error:" << to_string(e.code()) << ":" << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::logic_error& e) {
        err << "error:Internal:" << e.what() << '\n';
        return kExitInconsistent;
    }
}

} // namespace forestkit
