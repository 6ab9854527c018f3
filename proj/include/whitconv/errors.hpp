#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace whitconv {

// Base of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument: out of the mathematical domain of the operation.
struct DomainError : Error {
    using Error::Error;
};

// Gamma function evaluated at a nonpositive integer.
struct GammaPoleError : DomainError {
    using DomainError::DomainError;
};

// Integral known to diverge for the given arguments.
struct DivergenceError : DomainError {
    using DomainError::DomainError;
};

// Adaptive quadrature failed to reach the requested tolerance.
struct QuadratureError : Error {
    using Error::Error;
};

// Tail of a semi-infinite integral did not decay (or decay not detected).
struct TailError : Error {
    using Error::Error;
};

// Output grid carries too little of the mass it should represent.
struct CoverageError : Error {
    using Error::Error;
};

// Root bracketing failed (CDF inversion).
struct BracketError : Error {
    using Error::Error;
};

// Declared growth envelope violated and the integral did not converge.
struct EnvelopeError : Error {
    using Error::Error;
};

// Guard against runaway cost (k > 4 moments, atom-pair blowup).
struct CostCapError : Error {
    using Error::Error;
};

// Numerical calibration did not stabilize.
struct CalibrationError : Error {
    using Error::Error;
};

// Simulation scheme refinement exceeded its cap.
struct SchemeError : Error {
    using Error::Error;
};

// Finite-difference step too large for the requested point.
struct StepError : Error {
    using Error::Error;
};

// Non-fatal diagnostics. Operations that can downgrade accuracy or observe a
// soft contract violation append here when a sink is provided.
struct Warnings {
    std::vector<std::string> messages;
    void add(std::string msg) { messages.push_back(std::move(msg)); }
    bool empty() const { return messages.empty(); }
};

} // namespace whitconv
