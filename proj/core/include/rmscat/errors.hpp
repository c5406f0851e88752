#pragma once

#include <stdexcept>
#include <string>

namespace rmscat {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Argument outside the admissible domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// A gamma function (or gamma-ratio) argument landed on a pole.
/// `argument()` names which argument degenerated, when known.
class PoleError : public Error {
public:
    explicit PoleError(const std::string& msg, std::string argument = {})
        : Error(msg), argument_(std::move(argument)) {}
    const std::string& argument() const noexcept { return argument_; }

private:
    std::string argument_;
};

/// Series or iteration failed to reach the requested tolerance.
class NonConvergenceError : public Error {
public:
    explicit NonConvergenceError(const std::string& msg) : Error(msg) {}
};

/// The z -> 1-z linear transformation is degenerate (c-a-b near an integer).
class DegenerateTransformError : public Error {
public:
    explicit DegenerateTransformError(const std::string& msg) : Error(msg) {}
};

/// Wavenumber at the barrier threshold |k| = 2 sqrt(beta).
class ThresholdError : public Error {
public:
    explicit ThresholdError(const std::string& msg) : Error(msg) {}
};

/// Wavenumber at (or too close to) k = 0.
class ZeroMomentumError : public Error {
public:
    explicit ZeroMomentumError(const std::string& msg) : Error(msg) {}
};

/// The 1/(k^2 - p^2) prefactor of the orthogonality bracket is singular.
class PrefactorSingularError : public Error {
public:
    explicit PrefactorSingularError(const std::string& msg) : Error(msg) {}
};

/// Integrator step too coarse for the local wavelength.
class StepSizeError : public Error {
public:
    explicit StepSizeError(const std::string& msg) : Error(msg) {}
};

/// Least-squares amplitude fit is ill-conditioned.
class FitConditioningError : public Error {
public:
    explicit FitConditioningError(const std::string& msg) : Error(msg) {}
};

/// Adaptive quadrature could not reach its tolerance.
class QuadratureError : public Error {
public:
    explicit QuadratureError(const std::string& msg) : Error(msg) {}
};

}  // namespace rmscat
