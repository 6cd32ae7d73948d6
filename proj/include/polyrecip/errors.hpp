#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polyrecip {

enum class ErrorCode {
  MalformedDocument,
  NonPlanarFace,
  OpenCell,
  DanglingFace,
  InconsistentOrientation,
  EmptySystem,
  ZeroDof,
  DimensionMismatch,
  Infeasible,
  ZeroSolution,
  DisconnectedComplex,
  RoleMismatch,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace polyrecip
