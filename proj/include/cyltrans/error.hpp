#pragma once

#include <stdexcept>
#include <string>

namespace cylt {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  EmptyInput,
  ZeroDirection,
  ParallelAxes,
  NotPairwiseIntersecting,
  NotCrossIntersecting,
  PerturbationFailed,
  GuaranteeMissed,
  GenerationFailed,
  NotWellRounded,
  NotPairwiseIntersectable,
  InsufficientResolution,
  PiercingFailure,
  Internal,
};

// The single exception type of the library. `witness_a`/`witness_b` carry the
// offending indices for the pair/body validation errors, -1 when not relevant.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, int witness_a = -1, int witness_b = -1)
      : std::runtime_error(std::move(message)), code_(code), witness_a_(witness_a), witness_b_(witness_b) {}

  ErrorCode code() const { return code_; }
  int witness_a() const { return witness_a_; }
  int witness_b() const { return witness_b_; }

 private:
  ErrorCode code_;
  int witness_a_;
  int witness_b_;
};

}  // namespace cylt
