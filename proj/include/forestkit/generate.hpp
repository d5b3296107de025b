#ifndef FORESTKIT_GENERATE_HPP
#define FORESTKIT_GENERATE_HPP

#include "forestkit/graph_io.hpp"

#include <cstdint>
#include <string_view>

namespace forestkit {

enum class GenKind { Path, Cycle, Complete, Random };

/// Bounds for weight numerators and denominators. lo == hi gives the
/// constant integer weight lo.
struct WeightRange {
    unsigned lo = 1;
    unsigned hi = 1;
};

/// "path" | "cycle" | "complete" | "random"; throws BadParameters.
GenKind parse_gen_kind(std::string_view name);

/// "a" or "a..b" with 1 <= a <= b; throws BadParameters.
WeightRange parse_weight_range(std::string_view text);

/// Deterministic generator: the same arguments always give the same file.
/// `random` keeps each ordered pair i != j as an arc with probability 1/2.
GraphFile generate(GenKind kind, std::size_t n, std::uint64_t seed, WeightRange weights);

} // namespace forestkit

#endif
