#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toroidal {

enum class Errc {
  ParseError,
  DivisionByZero,
  EmptyPolynomial,
  ConstantTermZero,
  RankMismatch,
  IndexOutOfRange,
  InvalidLieData,
  BasisSearchFailed,
  InvalidArgument,
  ZeroPoint,
  MissingRestrictionBound,
  MissingWeightData,
  NotWithinValidWindow,
  NoTruncationBound,
  WindowTooSmall,
  SingularSystem,
  InvalidWitness,
  NotInCategory,
  NilpotencyBoundExceeded,
  InvalidDescriptor,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// message names the offending argument or field.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace toroidal
