#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypred {

enum class ErrorCode {
  NonUniform,
  RepeatedNode,
  BadWeight,
  EmptyInput,
  InvalidArgument,
  ZeroDegree,
  TooLarge,
  TooMany,
  NoConvergence,
  NoPositiveEigenpair,
  NotAnEdge,
  NoCandidates,
  BetaTooLarge,
  TooFewEdges,
  SamplingExhausted,
  Config,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hypred
