#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcdm {

enum class ErrorCode {
  DimensionMismatch,
  NegativeEntry,
  NonFiniteEntry,
  AllZeroColumn,
  DuplicateCriterionName,
  EmptyName,
  TooFewAlternatives,
  NoCriteria,
  NonFiniteScore,
  InvalidWeights,
  WeightDimensionMismatch,
  MissingFixedWeight,
  AllZeroWeights,
  LengthMismatch,
  InvalidRanking,
  InvalidDelta,
  ParseError,
  HeaderMismatch,
  IoError,
  WriteError,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mcdm
