#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace atx {

enum class ErrorCode {
    InvalidEdge,
    DuplicateEdge,
    InvalidParameter,
    InvalidInput,
    UnanchoredComponent,
    ParseError,
    TooLarge,
    AlreadyDirected,
    NotACutVertex,
    PatternMismatch,
    DuplicateVertex,
    NoColoring,
    WrongClass,
    InvalidBackMap,
    ContractViolation,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Malformed text input. `offset` is a byte offset for single-graph input and a
// 1-based line number for graph streams.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : Error(ErrorCode::ParseError, what + " at " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

// Postconditions the constructions guarantee; a failure here is a bug, not bad input.
inline void ensure(bool condition, const std::string& what) {
    if (!condition) fail(ErrorCode::ContractViolation, what);
}

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::UnanchoredComponent: return "UnanchoredComponent";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::AlreadyDirected: return "AlreadyDirected";
    case ErrorCode::NotACutVertex: return "NotACutVertex";
    case ErrorCode::PatternMismatch: return "PatternMismatch";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::NoColoring: return "NoColoring";
    case ErrorCode::WrongClass: return "WrongClass";
    case ErrorCode::InvalidBackMap: return "InvalidBackMap";
    case ErrorCode::ContractViolation: return "ContractViolation";
    }
    return "Unknown";
}

} // namespace atx
