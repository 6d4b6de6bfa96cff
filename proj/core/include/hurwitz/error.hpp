#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hurwitz {

enum class ErrorCode {
    EmptyInput,
    AllZero,
    ParseError,
    ResultIsZero,
    InvalidDegree,
    NotDivisible,
    DegreeZero,
    DegreeMismatch,
    NotPositiveCoefficients,
    BothZero,
    ShapeViolation,
    NotQuasiStableInput,
    StructureViolation,
    DomainError,
    ParamDomain,
    NonConvergence,
};

std::string_view to_string(ErrorCode code);

/// Every precondition failure in the library is reported through this type.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace hurwitz
