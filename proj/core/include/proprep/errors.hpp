#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace proprep {

enum class ErrorCode {
    WrongCommitteeSize,
    CandidateOutOfRange,
    MalformedProfile,
    EmptyCoalition,
    EllOutOfRange,
    BudgetExceeded,
    ParameterTooSmall,
    InvalidSpec,
    ParseError,
    Cancelled,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// A rejected input file; `line` is 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason)
    {
    }

    std::size_t line() const noexcept { return line_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

} // namespace proprep
