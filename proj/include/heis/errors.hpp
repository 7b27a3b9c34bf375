#pragma once

#include <stdexcept>
#include <string>

namespace heis {

/// Base class for math-level failures (CLI maps these to exit code 3).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Normalization factor evaluated at one of its poles.
class SingularPointError : public Error {
public:
    using Error::Error;
};

/// w.v (or an eigenvector problem) degenerate: evaluation too close to a pole of X.
class PoleProximityError : public Error {
public:
    using Error::Error;
};

/// Unit-eigenvalue eigenspace not one dimensional, or Jordan-contaminated.
class DegenerateEigenvalueError : public Error {
public:
    using Error::Error;
};

/// Exact division requested for non-divisible operands.
class NonDivisibleError : public Error {
public:
    using Error::Error;
};

/// Computation would exceed the configured polynomial degree cap.
class DegreeCapError : public Error {
public:
    using Error::Error;
};

/// Large-mu degree gap of a rational charge is not the expected 2.
class DegreeGapError : public Error {
public:
    using Error::Error;
};

/// Polynomial root finder failed to reach the target residual.
class RootFindingError : public Error {
public:
    using Error::Error;
};

/// Operation defined for a different representation (e.g. hyperbola law is jj=1 only).
class WrongRepresentationError : public Error {
public:
    using Error::Error;
};

/// Requested point is not a pole (Jordan defect absent).
class PoleMismatchError : public Error {
public:
    using Error::Error;
};

/// Adjugate columns all vanish; rank deficiency exceeds one.
class AdjugateRankError : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature failed to converge.
class QuadratureError : public Error {
public:
    using Error::Error;
};

/// Internal consistency check failed (a structural assumption was violated).
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace heis
