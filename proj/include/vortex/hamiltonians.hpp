#pragma once

#include <Eigen/Dense>
#include <complex>

#include "vortex/errors.hpp"

namespace vortex {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

enum class Family { Euler, BEC, NLSSites };

/// Which Hamiltonian family, vorticities and (for BEC) trap parameters.
struct SystemSpec {
    Family family = Family::Euler;
    int n = 2;
    RVec gamma;            // n positive vorticities
    double mu = 0.0;       // BEC trap precession, required iff family == BEC
    double lambda = 0.0;   // BEC interaction strength, required iff family == BEC
    double collision_eps = 1e-12;

    static SystemSpec euler(int n, double gamma_all = 1.0);
    static SystemSpec bec(int n, double mu, double lambda, double gamma_all = 1.0);
    static SystemSpec nls_sites(int n, double gamma_all = 1.0);

    void validate() const;
    bool identical_gamma() const;
};

/// Configuration of n planar points, stored as complex positions z_i = x_i + i y_i.
struct VortexState {
    CVec z;

    int n() const { return static_cast<int>(z.size()); }
    double min_pair_distance() const;
};

/// Throws CollisionError / DomainError if Z violates the admissibility
/// constraints of spec (pairwise separation, BEC unit disc).
void check_admissible(const SystemSpec& spec, const VortexState& Z);

double energy(const SystemSpec& spec, const VortexState& Z);

/// Euclidean gradient of energy packed as complex numbers:
/// component i is dH/dx_i + i*dH/dy_i.
CVec grad_energy(const SystemSpec& spec, const VortexState& Z);

/// Gamma-weighted Hamiltonian vector field: zdot_i = (1/Gamma_i) * J grad_i H,
/// with J = [[0,1],[-1,0]] acting blockwise (multiplication by -i on packed
/// complex gradients).
CVec vector_field(const SystemSpec& spec, const VortexState& Z);

/// Same field but without the strict BEC disc check: the trap term extends
/// smoothly across |z| = 1, which lets adaptive integrators evaluate trial
/// stages that transiently overshoot the domain. Collision guard still applies.
CVec vector_field_relaxed(const SystemSpec& spec, const VortexState& Z);

struct FirstIntegrals {
    double H;
    double I;  // Gamma-weighted moment of inertia, sum Gamma_i |z_i|^2
    double P;  // (1/n) sum x_i; not conserved for BEC
    double Q;  // (1/n) sum y_i; not conserved for BEC
    bool pq_conserved;  // false for BEC (trap breaks translation invariance)
};

FirstIntegrals first_integrals(const SystemSpec& spec, const VortexState& Z);

/// Cyclic permutation sigma~: (z_1,...,z_n) -> (z_n,z_1,...,z_{n-1}).
CVec cyclic_shift(const CVec& z);

/// Inverse of cyclic_shift.
CVec cyclic_shift_inverse(const CVec& z);

/// Regular n-gon of radius r, vertex k at r*exp(2*pi*i*k/n), k=1..n.
VortexState regular_ngon(int n, double radius, double phase = 0.0);

} // namespace vortex
