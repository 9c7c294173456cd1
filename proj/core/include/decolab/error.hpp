#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace decolab {

enum class ErrorCode {
  kZeroVector,
  kNotNormalized,
  kInvalidEnergies,
  kInvalidRates,
  kInvalidArgument,
  kNonPhysical,
  kOverflowGuard,
  kBracketFailure,
  kDegenerateSpectrum,
  kDegenerateAmplitude,
  kDimensionMismatch,
  kDegenerateCase,
  kConfig,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace decolab
