#include "forestkit/generate.hpp"

#include "forestkit/error.hpp"

#include <charconv>
#include <random>
#include <string>

namespace forestkit {

namespace {

unsigned parse_unsigned(std::string_view token) {
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw Error(ErrorCode::BadParameters, "expected an unsigned integer, got '" + std::string(token) + "'");
    return value;
}

// mt19937_64 output is fully specified, unlike the std distributions, so
// reduce it by hand to keep output identical across standard libraries.
unsigned draw(std::mt19937_64& rng, unsigned lo, unsigned hi) {
    return lo + static_cast<unsigned>(rng() % (static_cast<std::uint64_t>(hi) - lo + 1));
}

Rational draw_weight(std::mt19937_64& rng, WeightRange range) {
    if (range.lo == range.hi)
        return Rational(range.lo);
    const unsigned p = draw(rng, range.lo, range.hi);
    const unsigned q = draw(rng, range.lo, range.hi);
    Rational w(p, q);
    w.canonicalize();
    return w;
}

} // namespace

GenKind parse_gen_kind(std::string_view name) {
    if (name == "path")
        return GenKind::Path;
    if (name == "cycle")
        return GenKind::Cycle;
    if (name == "complete")
        return GenKind::Complete;
    if (name == "random")
        return GenKind::Random;
    throw Error(ErrorCode::BadParameters, "unknown graph kind '" + std::string(name) + "'");
}

WeightRange parse_weight_range(std::string_view text) {
    WeightRange range;
    if (auto dots = text.find(".."); dots != std::string_view::npos) {
        range.lo = parse_unsigned(text.substr(0, dots));
        range.hi = parse_unsigned(text.substr(dots + 2));
    } else {
        range.lo = range.hi = parse_unsigned(text);
    }
    if (range.lo < 1 || range.lo > range.hi)
        throw Error(ErrorCode::BadParameters, "weight range must satisfy 1 <= lo <= hi");
    return range;
}

GraphFile generate(GenKind kind, std::size_t n, std::uint64_t seed, WeightRange weights) {
    if (n < 2)
        throw Error(ErrorCode::BadParameters, "generated graphs need n >= 2");
    if (weights.lo < 1 || weights.lo > weights.hi)
        throw Error(ErrorCode::BadParameters, "weight range must satisfy 1 <= lo <= hi");

    std::mt19937_64 rng(seed);
    GraphFile file;
    file.directed = true;
    file.n = n;
    auto add = [&](Vertex t, Vertex h) { file.arcs.push_back({t, h, draw_weight(rng, weights)}); };

    switch (kind) {
    case GenKind::Path:
        for (Vertex v = 0; v + 1 < n; ++v)
            add(v, v + 1);
        break;
    case GenKind::Cycle:
        for (Vertex v = 0; v < n; ++v)
            add(v, (v + 1) % n);
        break;
    case GenKind::Complete:
        for (Vertex t = 0; t < n; ++t)
            for (Vertex h = 0; h < n; ++h)
                if (t != h)
                    add(t, h);
        break;
    case GenKind::Random:
        for (Vertex t = 0; t < n; ++t)
            for (Vertex h = 0; h < n; ++h)
                if (t != h && (rng() & 1U))
                    add(t, h);
        break;
    }
    return file;
}

} // namespace forestkit
