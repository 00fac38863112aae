#include "bltk/errors.hpp"

namespace bltk {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::DrasticNotResiduated: return "DrasticNotResiduated";
    case ErrorCode::InvalidRadius: return "InvalidRadius";
    case ErrorCode::InadmissibleRadius: return "InadmissibleRadius";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::TableOutOfRange: return "TableOutOfRange";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorCode::UnboundAtom: return "UnboundAtom";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnbalancedParens: return "UnbalancedParens";
    case ErrorCode::UnknownToken: return "UnknownToken";
  }
  return "Unknown";
}

}  // namespace bltk
