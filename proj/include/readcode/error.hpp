#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace readcode {

/// Failure categories surfaced by the library. Every thrown readcode::Error
/// carries exactly one of these.
enum class ErrorCode {
    InvalidReadLength,
    InvalidSymbol,
    NotARealization,
    ShapeMismatch,
    NotDistinct,
    EmptyWord,
    RankOutOfRange,
    IdenticalWords,
    NotDistanceFour,
    InvalidFamilyParams,
    BudgetExceeded,
    IndexOutOfRange,
    PrescribedTNonpositive,
    PreconditionViolated,
    RadiusTooLarge,
    MaxOverEmptySet,
    UnknownCheck,
    ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace readcode
