#ifndef FUZZYREG_ERROR_HPP
#define FUZZYREG_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace fuzzyreg {

enum class ErrorKind {
    InvalidUniverse,
    InvalidMembership,
    InvalidVariable,
    InvalidRuleBase,
    InvalidArgument,
    NonFiniteInput,
    DimensionMismatch,
    EmptyRuleBase,
    ZeroMass,
    ParseError,
    ValidationError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library. `path` names the offending
/// config field (or is empty when the error is not tied to a document).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::string path = {})
        : std::runtime_error(message), kind_(kind), path_(std::move(path)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& path() const noexcept { return path_; }

private:
    ErrorKind kind_;
    std::string path_;
};

} // namespace fuzzyreg

#endif
