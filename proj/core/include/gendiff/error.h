#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gendiff {

enum class ErrorCode {
  kAliasingRisk,
  kInvalidInput,
  kMagnitudeLimit,
  kNotInRange,
  kNotDecomposable,
  kNotInSubspace,
  kBadShiftSet,
  kDegenerateFrequency,
  kDomainMismatch,
  kOutOfCell,
  kStructuralViolation,
  kSearchExhausted,
};

// Stable machine-readable name, e.g. "NotInRange".
std::string_view error_name(ErrorCode code);

// Every failure raised by the library. Optional integer details name the
// offending frequency (spectral errors) or construction level (sharpness).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

  std::optional<std::int64_t> frequency() const noexcept { return frequency_; }
  std::optional<std::int64_t> level() const noexcept { return level_; }

  Error& with_frequency(std::int64_t n) {
    frequency_ = n;
    return *this;
  }
  Error& with_level(std::int64_t l) {
    level_ = l;
    return *this;
  }

 private:
  ErrorCode code_;
  std::optional<std::int64_t> frequency_;
  std::optional<std::int64_t> level_;
};

}  // namespace gendiff
