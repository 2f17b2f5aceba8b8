#pragma once

#include <stdexcept>
#include <string>

namespace g2s6 {

/// Base class for all domain errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Inversion of an element with |a|^2 below the zero-divisor epsilon.
struct ZeroDivisor : Error {
    using Error::Error;
};

/// A frame triple (xi, eta, zeta) violates the required orthogonality
/// relations, or a fiber matrix is inconsistent with any automorphism.
struct OrthogonalityViolation : Error {
    using Error::Error;
};

/// Conjugation by r is not an automorphism (r real, or 4 r1^2 != |r|^2).
struct NotInnerAutomorphism : Error {
    using Error::Error;
};

/// A base point lies outside the domain of the requested chart translator.
struct PoleSingularity : Error {
    using Error::Error;
};

struct NotOnEquator : Error {
    using Error::Error;
};

/// Vector not tangent at the given sphere point.
struct TangencyViolation : Error {
    using Error::Error;
};

/// Bundle element does not project into the requested chart.
struct ChartViolation : Error {
    using Error::Error;
};

/// Matrix failed the unitarity / determinant check.
struct NonUnitary : Error {
    using Error::Error;
};

struct NotUnit : Error {
    using Error::Error;
};

/// Input outside the stated domain of a closed-form map.
struct DomainViolation : Error {
    using Error::Error;
};

/// Jacobian determinant too close to zero for a sign decision.
struct SingularJacobian : Error {
    using Error::Error;
};

/// Invalid run configuration (bad sample count, tolerance, ...).
struct ConfigError : Error {
    using Error::Error;
};

} // namespace g2s6
