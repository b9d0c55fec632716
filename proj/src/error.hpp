#pragma once

#include <stdexcept>
#include <string>

namespace hermeis {

// Error kinds surfaced through the C API as status codes.  Keep the
// numbering in sync with the hermeis_status enum in include/hermeis.h.
enum class ErrorCode : int {
    Ok = 0,
    InvalidArgument = 1,
    NotAUnit = 2,
    NoSquareRoot = 3,
    NotPIntegral = 4,
    ZeroArgument = 5,
    IndexOutOfRange = 6,
    NotPositive = 7,
    OddSize = 8,
    TooManyParts = 9,
    NotInvertible = 10,
    WeightTooSmall = 11,
    MalformedInput = 12,
    ConfigError = 13,
    InternalError = 14,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace hermeis
