#include "cuckooseg/error.hpp"

namespace cuckooseg {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ValueOutOfRange: return "ValueOutOfRange";
    case ErrorCode::InvalidBeta: return "InvalidBeta";
    case ErrorCode::TooManyLevels: return "TooManyLevels";
    case ErrorCode::Unrepairable: return "Unrepairable";
    case ErrorCode::DegenerateImage: return "DegenerateImage";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::InvalidArgs: return "InvalidArgs";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::UnsupportedMaxval: return "UnsupportedMaxval";
    case ErrorCode::TruncatedData: return "TruncatedData";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace cuckooseg
