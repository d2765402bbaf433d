#include "toroidal/error.hpp"

namespace toroidal {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::EmptyPolynomial: return "EmptyPolynomial";
    case Errc::ConstantTermZero: return "ConstantTermZero";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::InvalidLieData: return "InvalidLieData";
    case Errc::BasisSearchFailed: return "BasisSearchFailed";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ZeroPoint: return "ZeroPoint";
    case Errc::MissingRestrictionBound: return "MissingRestrictionBound";
    case Errc::MissingWeightData: return "MissingWeightData";
    case Errc::NotWithinValidWindow: return "NotWithinValidWindow";
    case Errc::NoTruncationBound: return "NoTruncationBound";
    case Errc::WindowTooSmall: return "WindowTooSmall";
    case Errc::SingularSystem: return "SingularSystem";
    case Errc::InvalidWitness: return "InvalidWitness";
    case Errc::NotInCategory: return "NotInCategory";
    case Errc::NilpotencyBoundExceeded: return "NilpotencyBoundExceeded";
    case Errc::InvalidDescriptor: return "InvalidDescriptor";
  }
  return "Unknown";
}

}  // namespace toroidal
