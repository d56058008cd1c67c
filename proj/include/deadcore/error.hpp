#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace deadcore {

enum class ErrorCode {
    InvalidInput,
    DomainError,
    SingularPoint,
    DegenerateBalance,
    SignError,
    TieUnresolved,
    NoDeadCore,
    DegenerateGradient,
    Overflow,
    BracketError,
    NotConverged,
    InsufficientData,
    UnsupportedForThreshold,
};

std::string_view to_string(ErrorCode code) noexcept;

// All recoverable failures of the toolkit are reported through this type;
// code() lets callers dispatch without parsing the message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace deadcore
