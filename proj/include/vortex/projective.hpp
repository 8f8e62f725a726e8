#pragma once

#include "vortex/hamiltonians.hpp"

namespace vortex {

/// Point of CP^k stored as a unit-norm homogeneous representative.
/// The stored phase carries no meaning; compare points with fs_distance.
struct ProjectivePoint {
    CVec v;

    int k() const { return static_cast<int>(v.size()) - 1; }
};

/// Projectivize a nonzero vector (Hopf projection composed with scaling).
ProjectivePoint hopf_project(const CVec& Z);
ProjectivePoint hopf_project(const VortexState& Z);

/// Fubini-Study geodesic distance arccos(|<p,q>|), in [0, pi/2].
double fs_distance(const ProjectivePoint& p, const ProjectivePoint& q);

enum class LimDirection { Forward, Inverse };

/// Unitary DFT frame: row k of U is (1/sqrt(n)) * exp(-2*pi*i*j*k/n), j=1..n,
/// so the last row is (1/sqrt(n))(1,...,1) and U diagonalizes the cyclic shift.
struct LimFrame {
    int n;
    Eigen::MatrixXcd U;

    explicit LimFrame(int n);
};

/// Forward: W = U Z (so w_n = (1/sqrt(n)) sum z_i); Inverse: U* W.
CVec lim_transform(const LimFrame& frame, const CVec& Z, LimDirection direction);

/// Cyclic coordinate action on CP^{n-1}: [z_1:...:z_n] -> [z_n:z_1:...:z_{n-1}].
ProjectivePoint sigma1(const ProjectivePoint& p);

/// Induced cyclic action on CP^{n-2} through the Lim frame. Computed via the
/// composite lift/append-0/shift/drop path; with the DFT frame this equals
/// coordinatewise multiplication by exp(-2*pi*i*k/n) (see sigma2_diagonal).
ProjectivePoint sigma2(const ProjectivePoint& q);

/// Diagonal-phase realization of sigma2; must agree with the composite path.
ProjectivePoint sigma2_diagonal(const ProjectivePoint& q);

} // namespace vortex
