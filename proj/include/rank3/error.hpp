#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rank3 {

enum class Errc {
  NotPrime,
  DegreeOutOfRange,
  CapExceeded,
  FieldMismatch,
  LogOfZero,
  EmptySet,
  MalformedPartition,
  OrderCondition,
  DegreeCondition,
  CharCondition,
  NotSymmetric,
  QuarticUnavailable,
  ContainsZero,
  Directed,
  BadResidue,
  TooLarge,
  DegenerateModulus,
  InvalidArgument,
};

std::string_view to_string(Errc code) noexcept;

/// Precondition failure raised by every module. The message names the
/// violated condition, e.g. "ord_ell(p) != ell-1".
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace rank3
