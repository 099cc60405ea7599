#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tandel {

enum class ErrorCode {
  AlphaIsOne,
  AlphaZero,
  EssentialSingularityInput,
  PoleInput,
  NoPoles,
  ParamOutsideDisk,
  InvalidSeed,
  NoConvergence,
  DegenerateDerivative,
  DerivativeThroughPole,
  ContinuationLost,
  NotHyperbolic,
  GridOutsideHalfDisk,
  AZero,
  ZeroPixelViewport,
  MalformedTile,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Every domain failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tandel
