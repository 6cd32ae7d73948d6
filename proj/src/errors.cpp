#include "polyrecip/errors.hpp"

namespace polyrecip {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::NonPlanarFace: return "NonPlanarFace";
    case ErrorCode::OpenCell: return "OpenCell";
    case ErrorCode::DanglingFace: return "DanglingFace";
    case ErrorCode::InconsistentOrientation: return "InconsistentOrientation";
    case ErrorCode::EmptySystem: return "EmptySystem";
    case ErrorCode::ZeroDof: return "ZeroDof";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::ZeroSolution: return "ZeroSolution";
    case ErrorCode::DisconnectedComplex: return "DisconnectedComplex";
    case ErrorCode::RoleMismatch: return "RoleMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace polyrecip
