#pragma once

#include <stdexcept>
#include <string>

namespace modinv {

enum class ErrorCode {
    DivisionByZero = 10,
    Dimension,
    Divisibility,
    UndefinedGcd,
    Resource,
    Index,
    Degeneracy,
    InvalidFrame,
    Catalog,
    Compatibility,
    Invertibility,
    NotPPoint,
    Range,
    Parse,
    Unsupported,
    UndefinedSystem,
    ParityViolation,
    Internal
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& msg) { throw Error(c, msg); }

}  // namespace modinv
