#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cuckooseg {

enum class ErrorCode {
  DimensionMismatch,
  ValueOutOfRange,
  InvalidBeta,
  TooManyLevels,
  Unrepairable,
  DegenerateImage,
  InvalidParams,
  InvalidArgs,
  TooLarge,
  BadMagic,
  UnsupportedMaxval,
  TruncatedData,
  MalformedHeader,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map them to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cuckooseg
