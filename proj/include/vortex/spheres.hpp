#pragma once

#include <optional>
#include <vector>

#include "vortex/projective.hpp"

namespace vortex {

enum class SphereTarget { CPn1, CPn2 };

/// Point of the extended complex plane C u {infinity}.
struct ExtComplex {
    Complex value{0.0, 0.0};
    bool infinite = false;

    static ExtComplex finite(Complex z) { return {z, false}; }
    static ExtComplex infinity() { return {Complex(0, 0), true}; }
};

/// The sigma-fixed endpoint configurations: for CP^{n-1} the total collision
/// A = [1:...:1] and the n-polygon B; for CP^{n-2} (n even) the Lim images of
/// the doubled (n/2)-gon (binary total collision) and the n-gon.
struct EndpointPair {
    ProjectivePoint A;
    ProjectivePoint B;
};

EndpointPair make_configurations(int n, SphereTarget target);

/// Degree-1 holomorphic sphere interpolating the two endpoint configurations,
/// equivariant for the cyclic action (u(exp(2 pi i/n) z) = sigma u(z)).
struct SphereMap {
    int n;
    SphereTarget target;
    ProjectivePoint A;
    ProjectivePoint B;
    Complex moebius_scale{1.0, 0.0};  // zeta in [eta : eta'] = [zeta z : 1]

    static SphereMap make(int n, SphereTarget target, Complex moebius_scale = {1.0, 0.0});
};

/// Evaluate the pencil at a point of the extended plane.
/// CPn1: u(z) = [eta_A + eta_B e^{2 pi i k/n}]_k with [eta_A:eta_B] = [zeta z:1],
/// so u(0) = B, u(inf) = A. CPn2: the Lim-coordinate pencil with
/// [eta_B:eta_A] = [zeta z:1], so u(0) = A, u(inf) = B.
ProjectivePoint evaluate_sphere(const SphereMap& s, const ExtComplex& z);

/// max over samples of fs_distance(u(e^{2 pi i/n} z), sigma u(z)).
double equivariance_defect(const SphereMap& s, const std::vector<ExtComplex>& samples);

enum class AreaRegion { UnitDisc, Full };

/// Fubini-Study area of the pullback u* omega over the region, normalized so
/// a projective line has total area pi. Full = unit disc + inverted chart.
double fs_area(const SphereMap& s, AreaRegion region, double quad_tol = 1e-8);

/// Bisect |moebius_scale| so that the unit-disc area equals target_area
/// (monotone increasing in |zeta|).
Complex fit_moebius_scale(const SphereMap& s, double target_area, double quad_tol = 1e-8);

} // namespace vortex
