#include "forestkit/graph_io.hpp"

#include "forestkit/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace forestkit {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& message) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + message);
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
            ++pos;
        std::size_t end = pos;
        while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end])))
            ++end;
        if (end > pos)
            out.push_back(line.substr(pos, end - pos));
        pos = end;
    }
    return out;
}

std::size_t parse_count(std::string_view token, std::size_t line) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        parse_error(line, "expected a non-negative integer, got '" + std::string(token) + "'");
    return value;
}

Vertex to_internal(std::size_t one_based, std::size_t n) {
    if (one_based < 1 || one_based > n)
        throw Error(ErrorCode::VertexOutOfRange,
                    "vertex " + std::to_string(one_based) + " outside 1.." + std::to_string(n));
    return one_based - 1;
}

} // namespace

WeightedMultiDigraph GraphFile::to_graph() const {
    if (directed)
        return WeightedMultiDigraph(n, arcs);
    std::vector<Edge> edges;
    edges.reserve(arcs.size());
    for (const auto& a : arcs)
        edges.push_back({a.tail, a.head, a.weight});
    return from_undirected(n, edges);
}

GraphFile parse_graph_text(std::string_view text) {
    GraphFile file;
    bool have_header = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);

        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#')
            continue;

        if (!have_header) {
            if (tokens.size() != 2 || (tokens[0] != "digraph" && tokens[0] != "graph"))
                parse_error(line_no, "expected header 'digraph <n>' or 'graph <n>'");
            file.directed = tokens[0] == "digraph";
            file.n = parse_count(tokens[1], line_no);
            have_header = true;
            continue;
        }
        if (tokens.size() != 3)
            parse_error(line_no, "expected '<tail> <head> <weight>'");
        Arc arc;
        arc.tail = to_internal(parse_count(tokens[0], line_no), file.n);
        arc.head = to_internal(parse_count(tokens[1], line_no), file.n);
        try {
            arc.weight = parse_rational(tokens[2]);
        } catch (const Error& e) {
            parse_error(line_no, e.what());
        }
        file.arcs.push_back(std::move(arc));
    }
    if (!have_header)
        throw Error(ErrorCode::ParseError, "missing 'digraph <n>' or 'graph <n>' header");
    return file;
}

GraphFile parse_graph_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("arcs") || !doc["n"].is_number_unsigned() ||
        !doc["arcs"].is_array())
        throw Error(ErrorCode::ParseError, "JSON graph needs an unsigned 'n' and an 'arcs' array");

    GraphFile file;
    file.n = doc["n"].get<std::size_t>();
    if (doc.contains("directed")) {
        if (!doc["directed"].is_boolean())
            throw Error(ErrorCode::ParseError, "'directed' must be a boolean");
        file.directed = doc["directed"].get<bool>();
    }
    for (const auto& entry : doc["arcs"]) {
        if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_unsigned() ||
            !entry[1].is_number_unsigned())
            throw Error(ErrorCode::ParseError, "each arc must be [tail, head, \"weight\"]");
        Arc arc;
        arc.tail = to_internal(entry[0].get<std::size_t>(), file.n);
        arc.head = to_internal(entry[1].get<std::size_t>(), file.n);
        if (entry[2].is_string())
            arc.weight = parse_rational(entry[2].get<std::string>());
        else if (entry[2].is_number_integer())
            arc.weight = parse_rational(entry[2].dump());
        else
            throw Error(ErrorCode::ParseError, "arc weight must be a string or an integer");
        file.arcs.push_back(std::move(arc));
    }
    return file;
}

GraphFile parse_graph(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{')
        return parse_graph_json(text);
    return parse_graph_text(text);
}

std::string emit_graph_text(const GraphFile& file) {
    auto arcs = file.arcs;
    std::stable_sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
        return a.tail != b.tail ? a.tail < b.tail : a.head < b.head;
    });
    std::ostringstream out;
    out << (file.directed ? "digraph " : "graph ") << file.n << '\n';
    for (const auto& a : arcs)
        out << a.tail + 1 << ' ' << a.head + 1 << ' ' << format_rational(a.weight) << '\n';
    return out.str();
}

} // namespace forestkit
