#pragma once

#include <vector>

#include "vortex/integrate.hpp"
#include "vortex/projective.hpp"

namespace vortex {

enum class LoopSpace { Ambient, CPn1, CPn2 };

/// Uniformly sampled closed loop, m samples at times j*T/m. The particle
/// count n must divide m so that the T/n time shift is an index shift.
struct LoopSample {
    LoopSpace space = LoopSpace::Ambient;
    double T = 0.0;
    int n = 0;
    std::vector<CVec> samples;  // unit-norm representatives in projective spaces

    int m() const { return static_cast<int>(samples.size()); }
    void check_grid() const;
};

/// Distance between two samples in the loop's space: Euclidean for Ambient,
/// Fubini-Study otherwise.
double loop_point_distance(LoopSpace space, const CVec& a, const CVec& b);

/// (g Z)(t) = sigma Z(t - T/n), exact on the sample grid.
LoopSample apply_g(const LoopSample& loop);

/// max_j distance(apply_g(loop)_j, loop_j); zero iff the loop is a
/// (reduced / centred-reduced) choreography on the grid.
double chore_defect(const LoopSample& loop);

/// Group average (1/n) sum_j g^j(loop) in ambient coordinates.
/// Throws NotApplicable for projective loops (no linear average).
LoopSample symmetrize(const LoopSample& loop);

/// Max Fubini-Study distance between any two samples of a projective loop.
double fs_diameter(const LoopSample& loop);

/// R_{-theta} Phi_{T_seg}(Z0) - sigma~ Z0, packed as 2n reals. A zero
/// generates a relative choreography via Z(t + T/n) = R_theta sigma~ Z(t).
RVec shooting_residual(const SystemSpec& spec, const VortexState& Z0, double T_seg,
                       double theta, double tol = 1e-12);

struct FrameAngle {
    double angle;     // alpha minimizing |R_alpha sigma~ Z_start - Z_end|
    double mismatch;  // attained minimum
};

FrameAngle frame_angle(const VortexState& Z_start, const VortexState& Z_end);

enum class Classification { TrivialRelativeEquilibrium, CentredPolygon, NonTrivial, Unclassified };

const char* classification_name(Classification c);

/// Candidate relative choreography with diagnostics.
struct OrbitResult {
    SystemSpec spec;
    VortexState Z0;
    double T_seg = 0.0;
    double theta = 0.0;
    double residual = 0.0;
    double chore_defect = 0.0;
    double fs_diameter = 0.0;
    double energy = 0.0;
    double I_level = 0.0;
    Classification classification = Classification::Unclassified;
    bool inconsistent_fit = false;
};

struct ClassifyReport {
    Classification classification = Classification::Unclassified;
    bool inconsistent_fit = false;  // persistent non-centred polygon with constant trap term
    double fs_diameter = 0.0;
    double max_fit_residual = 0.0;
    double trap_variation = 0.0;
    double max_centroid = 0.0;
};

/// Classify the reduced loop of an orbit: a point loop is a trivial relative
/// equilibrium; for BEC a persistent centred rotating n-gon with constant
/// trap term is a CentredPolygon; anything else with positive diameter is
/// NonTrivial.
ClassifyReport classify_orbit(const SystemSpec& spec, const OrbitResult& result,
                              const LoopSample& loop, double triviality_eps = 1e-3,
                              double fit_eps = 1e-8);

/// Assemble the full-period ambient loop from one flowed segment using
/// Z(t + T/n) = R_theta sigma~ Z(t); samples_per_segment points per segment.
LoopSample assemble_loop(const SystemSpec& spec, const VortexState& Z0, double T_seg,
                         double theta, int samples_per_segment, double tol = 1e-12);

/// Pointwise Hopf projection of an ambient loop to CP^{n-1}.
LoopSample reduce_loop(const LoopSample& loop);

} // namespace vortex
