#pragma once

#include <cstdint>
#include <vector>

#include "vortex/integrate.hpp"

namespace vortex {

/// n points on a circle of radius rho described by the gap angles between
/// consecutive points; the gaps must be positive and sum to 2*pi.
struct CircleConfig {
    RVec theta;
    double rho = 1.0;

    int n() const { return static_cast<int>(theta.size()); }
    void validate() const;

    static CircleConfig regular(int n, double rho = 1.0);
};

/// Sum over pairs of log chord lengths, l_ij = 2*rho*sin(half the gap sum).
double chord_log_sum(const CircleConfig& c);

/// Analytic gradient of chord_log_sum with respect to the gap angles.
RVec chord_log_sum_gradient(const CircleConfig& c);

struct MaximalityReport {
    int n = 0;
    int trials = 0;
    double ngon_value = 0.0;
    double max_sampled = 0.0;     // over random valid configurations
    double margin = 0.0;          // ngon_value - max_sampled
    double projected_gradient_norm = 0.0;  // at the regular n-gon, on sum(theta)=2pi
    bool pass = false;
};

/// Random sampling check that the regular n-gon maximizes chord_log_sum,
/// plus the constrained criticality check at the n-gon.
MaximalityReport ngon_maximality_test(int n, double rho, int trials, std::uint64_t seed);

/// Magnitude sqrt(a_n^2 + b_n^2) of the order-n Fourier coefficient of
/// theta -> prod_k (alpha_c + beta_c cos(theta + 2 pi k/n)), computed by a
/// discrete Fourier projection over 4n samples. Vanishes iff beta_c = 0.
double polygon_trap_coefficient(double alpha_c, double beta_c, int n);

struct ShubScanReport {
    int n_starts = 0;
    int converged = 0;
    double epsilon_hat = 0.0;  // min over equilibria of min pairwise squared distance
    double max_residual = 0.0;
    bool hypothesis_ok = true;  // I_level < min Gamma_i
    bool pass = false;
    std::vector<double> separations;  // m(Z) per converged equilibrium
};

/// Multi-start relative-equilibrium scan at a fixed I level reporting the
/// empirical lower bound on pairwise separation (BEC).
ShubScanReport shub_separation_scan(const SystemSpec& spec, double I_level, int n_starts,
                                    std::uint64_t seed, double re_tol = 1e-10);

struct ComponentProbeReport {
    int samples = 0;
    int connected = 0;
    double max_level_error = 0.0;       // |H - c| over probe endpoints
    double max_sigma_energy_gap = 0.0;  // |H(sigma Z) - H(Z)| over samples
    double success_rate() const { return samples ? static_cast<double>(connected) / samples : 0.0; }
};

/// Evidence-grade probe that the restricted level set {H|_{M_rho} = c} near
/// the n-gon has a sigma-invariant connected component: samples level points,
/// checks exact sigma-invariance of the energy, and path-traces from each
/// point to its sigma image by gradient-orthogonal stepping on the level set.
/// Throws LevelEmpty if c is not attainable near the n-gon.
ComponentProbeReport invariant_component_probe(const SystemSpec& spec, double c, double I_level,
                                               int samples, std::uint64_t seed);

} // namespace vortex
