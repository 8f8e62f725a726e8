#pragma once

#include <stdexcept>
#include <string>

namespace vortex {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two vortices closer than collision_eps.
struct CollisionError : Error {
    using Error::Error;
};

/// State outside the admissible domain (e.g. BEC vortex outside the unit disc).
struct DomainError : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct ZeroVector : Error {
    using Error::Error;
};

/// Loop sample count not divisible by the particle count.
struct GridMismatch : Error {
    using Error::Error;
};

struct NoConvergence : Error {
    using Error::Error;
};

/// Minimum pairwise distance dropped below collision_eps during integration.
struct CollisionApproach : Error {
    using Error::Error;
};

/// Adaptive step size underflow.
struct StepFailure : Error {
    using Error::Error;
};

struct NotApplicable : Error {
    using Error::Error;
};

struct DegenerateInput : Error {
    using Error::Error;
};

/// Coincident points on the circle (partial gap sum is a multiple of 2*pi).
struct DegenerateGap : Error {
    using Error::Error;
};

struct InvalidConfig : Error {
    using Error::Error;
};

struct QuadratureFailure : Error {
    using Error::Error;
};

/// Requested level set is empty near the reference configuration.
struct LevelEmpty : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace vortex
