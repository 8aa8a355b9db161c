#include "fuzzyreg/error.hpp"

namespace fuzzyreg {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidUniverse: return "InvalidUniverse";
    case ErrorKind::InvalidMembership: return "InvalidMembership";
    case ErrorKind::InvalidVariable: return "InvalidVariable";
    case ErrorKind::InvalidRuleBase: return "InvalidRuleBase";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonFiniteInput: return "NonFiniteInput";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::EmptyRuleBase: return "EmptyRuleBase";
    case ErrorKind::ZeroMass: return "ZeroMass";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    }
    return "Unknown";
}

} // namespace fuzzyreg
