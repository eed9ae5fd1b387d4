#include "graph_energy/error.hpp"

namespace genergy {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidChar: return "InvalidChar";
    case ErrorCode::TruncatedBits: return "TruncatedBits";
    case ErrorCode::BadHeader: return "BadHeader";
    case ErrorCode::TrailingData: return "TrailingData";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::Malformed: return "Malformed";
    case ErrorCode::UnsupportedParameter: return "UnsupportedParameter";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InternalMismatch: return "InternalMismatch";
    case ErrorCode::NoEdges: return "NoEdges";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::MajorizationFailed: return "MajorizationFailed";
    case ErrorCode::Infeasible: return "Infeasible";
  }
  return "Unknown";
}

}  // namespace genergy
