#ifndef FORESTKIT_ERROR_HPP
#define FORESTKIT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace forestkit {

enum class ErrorCode {
    LoopArc,
    NonPositiveWeight,
    VertexOutOfRange,
    TooFewVertices,
    SingularMatrix,
    NotConverged,
    InstanceTooLarge,
    EpsilonOutOfRange,
    InconsistentWithTheorem,
    ParseError,
    BadParameters,
};

/// Stable machine-readable name, e.g. "LoopArc".
std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace forestkit

#endif
