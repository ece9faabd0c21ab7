#ifndef SEMIQ_ERRORS_HPP
#define SEMIQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace semiq {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Division by zero, denominator vanishing at a root of unity, critical level
// where a non-critical one is required.
struct PoleError : Error {
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

// Inputs that violate a documented precondition (non-dominant weight where a
// dominant one is required, mismatched series truncations, ...).
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// A truncated computation was asked for data outside the window where the
// truncation is faithful.
struct TruncationError : Error {
    explicit TruncationError(const std::string& msg) : Error(msg) {}
};

// Something that should be impossible if the implementation is coherent
// (a Gaussian binomial specialization hitting a pole, a singular-vector solve
// coming up empty, d*d != 0).
struct ConsistencyError : Error {
    explicit ConsistencyError(const std::string& msg) : Error(msg) {}
};

} // namespace semiq

#endif
