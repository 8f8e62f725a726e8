#pragma once

#include <vector>

#include "vortex/hamiltonians.hpp"

namespace vortex {

/// Time-stamped states with their first integrals along a flow.
struct Trajectory {
    SystemSpec spec;
    std::vector<double> times;
    std::vector<VortexState> states;
    std::vector<FirstIntegrals> integrals;

    const VortexState& final_state() const { return states.back(); }

    /// Max relative drift of each integral vs the initial values.
    struct Drift {
        double H, I, P, Q;
    };
    Drift integral_drift() const;
};

/// Adaptive RKF78 integration of the Gamma-weighted vector field with dense
/// output at n_samples+1 uniformly spaced times in [0, T].
/// Throws CollisionApproach if the pairwise separation drops below
/// collision_eps during integration, StepFailure on step underflow.
Trajectory flow(const SystemSpec& spec, const VortexState& Z0, double T,
                double tol = 1e-10, int n_samples = 200);

/// Final state only (same integration, no intermediate storage).
VortexState flow_final(const SystemSpec& spec, const VortexState& Z0, double T,
                       double tol = 1e-10);

/// Uniformly rotating configuration: vector_field(Z) = i*omega*(Z - center)
/// componentwise, so omega is the counterclockwise phase rate (matches the
/// short-flow phase-rate oracle).
struct RelativeEquilibrium {
    VortexState Z;
    double omega = 0.0;
    Complex center{0.0, 0.0};
    double residual = 0.0;
};

/// Euclidean norm of vector_field(Z) - i*omega*(Z - center).
double relative_equilibrium_residual(const SystemSpec& spec, const VortexState& Z,
                                     double omega, Complex center = {0.0, 0.0});

/// Best omega (least squares) for a rigid rotation about center fitting the field.
double fit_omega(const SystemSpec& spec, const VortexState& Z, Complex center = {0.0, 0.0});

/// Gauss-Newton solve of the relative-equilibrium equations with constraints
/// I(Z) = fix_I and the phase pin Im z_1 = 0, Re z_1 > 0. Center is the origin.
RelativeEquilibrium find_relative_equilibrium(const SystemSpec& spec,
                                              const VortexState& guess, double fix_I,
                                              double re_tol = 1e-10, int max_iter = 100);

} // namespace vortex
