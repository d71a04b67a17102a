#pragma once

#include <stdexcept>
#include <string>

namespace slv {

/// Base class for every error the library raises.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A strain-sum value left the open admissible interval of the constitutive
/// law (the strain limit was reached).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A trajectory's strain exceeded the configured bound delta. Narrower than
/// DomainError: the value may still be invertible, but the solve contract
/// requires staying inside delta.
class StrainBoundError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Initial data whose integral is not (numerically) zero; incompatible with
/// a potential that vanishes at both ends of the domain.
class MeanZeroViolation : public Error {
public:
    using Error::Error;
};

/// The diffusion coefficient dropped below the configured floor.
class EllipticityError : public Error {
public:
    using Error::Error;
};

/// Explicit time step exceeds the hyperbolic stability limit.
class CourantViolation : public Error {
public:
    using Error::Error;
};

/// Picard distances stopped decreasing; the horizon is too large for the
/// iteration to contract.
class NoContraction : public Error {
public:
    using Error::Error;
};

/// Picard iteration cap reached before the tolerance was met.
class IterationLimit : public Error {
public:
    using Error::Error;
};

/// Contraction ratio requested for two identical trajectories.
class DegenerateInput : public Error {
public:
    using Error::Error;
};

/// Tridiagonal elimination hit a vanishing pivot. Cannot happen for
/// operators built through the public assemble path.
class SingularSystem : public Error {
public:
    using Error::Error;
};

/// Malformed or inconsistent scenario/configuration input.
class ScenarioError : public Error {
public:
    using Error::Error;
};

} // namespace slv
