#pragma once

#include <stdexcept>
#include <string>

namespace grunlab {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a profile or body.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Invalid numeric parameter (exponent, tolerance, count).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// A profile, body or config fails its structural invariants.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Zero total mass, vanishing anchor value and similar degeneracies.
class DegenerateError : public Error {
public:
    using Error::Error;
};

/// A theorem's hypothesis (p-concavity, convexity of the revolved body) fails.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature ran out of subdivisions; carries the best estimate.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double best_estimate)
        : Error(what), best_estimate_(best_estimate) {}

    double best_estimate() const noexcept { return best_estimate_; }

private:
    double best_estimate_;
};

}  // namespace grunlab
