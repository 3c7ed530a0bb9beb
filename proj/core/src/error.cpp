#include "noderank/error.hpp"

namespace noderank {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Usage: return "Usage";
    case ErrorCode::UnknownMetric: return "UnknownMetric";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::HeaderMismatch: return "HeaderMismatch";
    case ErrorCode::DuplicateNodeId: return "DuplicateNodeId";
    case ErrorCode::FieldParse: return "FieldParse";
    case ErrorCode::InfeasibleSpec: return "InfeasibleSpec";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DegenerateGraph: return "DegenerateGraph";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::InvalidMatrix: return "InvalidMatrix";
    case ErrorCode::MatrixTooLarge: return "MatrixTooLarge";
    case ErrorCode::PlanInfeasible: return "PlanInfeasible";
    case ErrorCode::EmptySeeds: return "EmptySeeds";
    case ErrorCode::Io: return "Io";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::ZeroMatrix: return "ZeroMatrix";
  }
  return "Unknown";
}

int exit_status(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Usage:
    case ErrorCode::UnknownMetric:
    case ErrorCode::InvalidArgument:
      return 1;
    case ErrorCode::NoConvergence:
    case ErrorCode::IllConditioned:
    case ErrorCode::ZeroMatrix:
      return 3;
    default:
      return 2;
  }
}

void fail(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(to_string(code)) + ": " + what);
}

}  // namespace noderank
