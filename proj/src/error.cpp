#include "forestkit/error.hpp"

namespace forestkit {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::LoopArc: return "LoopArc";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::EpsilonOutOfRange: return "EpsilonOutOfRange";
    case ErrorCode::InconsistentWithTheorem: return "InconsistentWithTheorem";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadParameters: return "BadParameters";
    }
    return "Unknown";
}

} // namespace forestkit
