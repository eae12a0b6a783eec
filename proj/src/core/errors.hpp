#pragma once

#include <stdexcept>
#include <string>

namespace tripick {

// Error categories mirrored one-to-one by the C API status codes.
enum class ErrorCode {
    invalid_argument = 1,
    singular = 2,        // rational evaluation with denominator below the guard
    degenerate = 3,      // collinear nodes, zero alpha triple, coincident points
    no_convergence = 4,  // Newton stall / sampler starvation
    verification = 5,    // a constructed object failed its own residual check
    out_of_range = 6,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void throw_invalid(const std::string& what) {
    throw Error(ErrorCode::invalid_argument, what);
}
[[noreturn]] inline void throw_singular(const std::string& what) {
    throw Error(ErrorCode::singular, what);
}
[[noreturn]] inline void throw_degenerate(const std::string& what) {
    throw Error(ErrorCode::degenerate, what);
}
[[noreturn]] inline void throw_no_convergence(const std::string& what) {
    throw Error(ErrorCode::no_convergence, what);
}
[[noreturn]] inline void throw_verification(const std::string& what) {
    throw Error(ErrorCode::verification, what);
}

} // namespace tripick
