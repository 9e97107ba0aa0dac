#pragma once

// Error taxonomy shared by every module. Each failure mode the library can
// signal has one code here; the C API maps them to integer statuses.

#include <stdexcept>
#include <string>

namespace qth {

enum class ErrorCode {
    DivisionByZero,
    DenominatorVanishes,
    NotExpandable,
    SingularMatrix,
    IntegralityViolation,
    PositivityViolation,
    RouteMismatch,
    IdentityFails,
    PolynomialityFails,
    ResourceBound,
    CellOutsideDiagram,
    CorruptCache,
    InvalidArgument,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline const char *error_code_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorCode::NotExpandable: return "NotExpandable";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::IntegralityViolation: return "IntegralityViolation";
    case ErrorCode::PositivityViolation: return "PositivityViolation";
    case ErrorCode::RouteMismatch: return "RouteMismatch";
    case ErrorCode::IdentityFails: return "IdentityFails";
    case ErrorCode::PolynomialityFails: return "PolynomialityFails";
    case ErrorCode::ResourceBound: return "ResourceBound";
    case ErrorCode::CellOutsideDiagram: return "CellOutsideDiagram";
    case ErrorCode::CorruptCache: return "CorruptCache";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

[[noreturn]] inline void fail(ErrorCode code, const std::string &what) {
    throw Error(code, what);
}

} // namespace qth
