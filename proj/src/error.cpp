#include "rank3/error.hpp"

namespace rank3 {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::LogOfZero: return "LogOfZero";
    case Errc::EmptySet: return "EmptySet";
    case Errc::MalformedPartition: return "MalformedPartition";
    case Errc::OrderCondition: return "OrderCondition";
    case Errc::DegreeCondition: return "DegreeCondition";
    case Errc::CharCondition: return "CharCondition";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::QuarticUnavailable: return "QuarticUnavailable";
    case Errc::ContainsZero: return "ContainsZero";
    case Errc::Directed: return "Directed";
    case Errc::BadResidue: return "BadResidue";
    case Errc::TooLarge: return "TooLarge";
    case Errc::DegenerateModulus: return "DegenerateModulus";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace rank3
