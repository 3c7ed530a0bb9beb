#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace noderank {

enum class ErrorCode {
  // usage
  Usage,
  UnknownMetric,
  InvalidArgument,
  // data
  MalformedLine,
  EmptyInput,
  HeaderMismatch,
  DuplicateNodeId,
  FieldParse,
  InfeasibleSpec,
  IndexOutOfRange,
  DegenerateGraph,
  SizeMismatch,
  InvalidMatrix,
  MatrixTooLarge,
  PlanInfeasible,
  EmptySeeds,
  Io,
  // numerical
  NoConvergence,
  IllConditioned,
  ZeroMatrix,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Process exit status for an error: 1 usage, 2 data, 3 numerical failure.
int exit_status(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace noderank
