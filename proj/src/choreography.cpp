#include "vortex/choreography.hpp"

#include <cmath>
#include <numbers>

namespace vortex {

namespace {
constexpr double kPi = std::numbers::pi;

CVec apply_sigma(LoopSpace space, const CVec& v) {
    switch (space) {
    case LoopSpace::Ambient:
    case LoopSpace::CPn1:
        return cyclic_shift(v);
    case LoopSpace::CPn2:
        return sigma2(ProjectivePoint{v}).v;
    }
    throw InvalidConfig("unknown loop space");
}

} // namespace

void LoopSample::check_grid() const {
    if (n < 1 || samples.empty())
        throw GridMismatch("LoopSample: empty loop");
    if (m() % n != 0)
        throw GridMismatch("LoopSample: particle count does not divide sample count");
}

double loop_point_distance(LoopSpace space, const CVec& a, const CVec& b) {
    if (space == LoopSpace::Ambient) return (a - b).norm();
    return fs_distance(ProjectivePoint{a}, ProjectivePoint{b});
}

LoopSample apply_g(const LoopSample& loop) {
    loop.check_grid();
    const int m = loop.m();
    const int shift = m / loop.n;
    LoopSample out = loop;
    for (int j = 0; j < m; ++j)
        out.samples[j] = apply_sigma(loop.space, loop.samples[(j - shift + m) % m]);
    return out;
}

double chore_defect(const LoopSample& loop) {
    const LoopSample g = apply_g(loop);
    double d = 0.0;
    for (int j = 0; j < loop.m(); ++j)
        d = std::max(d, loop_point_distance(loop.space, g.samples[j], loop.samples[j]));
    return d;
}

LoopSample symmetrize(const LoopSample& loop) {
    if (loop.space != LoopSpace::Ambient)
        throw NotApplicable("symmetrize: no linear average in projective spaces");
    loop.check_grid();
    LoopSample acc = loop;
    LoopSample pow = loop;
    for (int j = 1; j < loop.n; ++j) {
        pow = apply_g(pow);
        for (int i = 0; i < loop.m(); ++i) acc.samples[i] += pow.samples[i];
    }
    for (auto& s : acc.samples) s /= static_cast<double>(loop.n);
    return acc;
}

double fs_diameter(const LoopSample& loop) {
    if (loop.space == LoopSpace::Ambient)
        throw NotApplicable("fs_diameter: reduce the loop first");
    double d = 0.0;
    for (int i = 0; i < loop.m(); ++i)
        for (int j = i + 1; j < loop.m(); ++j)
            d = std::max(d, fs_distance(ProjectivePoint{loop.samples[i]},
                                        ProjectivePoint{loop.samples[j]}));
    return d;
}

RVec shooting_residual(const SystemSpec& spec, const VortexState& Z0, double T_seg,
                       double theta, double tol) {
    const VortexState Zt = flow_final(spec, Z0, T_seg, tol);
    const CVec target = cyclic_shift(Z0.z);
    const Complex rot = std::polar(1.0, -theta);
    RVec r(2 * spec.n);
    for (int i = 0; i < spec.n; ++i) {
        const Complex d = rot * Zt.z[i] - target[i];
        r[2 * i] = d.real();
        r[2 * i + 1] = d.imag();
    }
    return r;
}

FrameAngle frame_angle(const VortexState& Z_start, const VortexState& Z_end) {
    if (Z_start.z.size() != Z_end.z.size())
        throw DimensionMismatch("frame_angle: particle counts differ");
    if (Z_start.z.norm() == 0.0)
        throw DegenerateInput("frame_angle: zero start state");
    const CVec a = cyclic_shift(Z_start.z);
    const Complex s = a.dot(Z_end.z);  // sum conj(a_i) * z_end_i
    FrameAngle out;
    out.angle = std::arg(s);
    out.mismatch = (std::polar(1.0, out.angle) * a - Z_end.z).norm();
    return out;
}

const char* classification_name(Classification c) {
    switch (c) {
    case Classification::TrivialRelativeEquilibrium: return "TrivialRelativeEquilibrium";
    case Classification::CentredPolygon: return "CentredPolygon";
    case Classification::NonTrivial: return "NonTrivial";
    case Classification::Unclassified: return "Unclassified";
    }
    return "Unclassified";
}

namespace {

struct PolygonFit {
    Complex centroid;
    double residual;  // Euclidean misfit to the best rotating n-gon
};

// Least-squares fit z_k ~ c + p * exp(+-2*pi*i*k/n): the centroid is the mean
// and p is a DFT coefficient; both label orientations are tried.
PolygonFit fit_polygon(const CVec& z) {
    const int n = static_cast<int>(z.size());
    PolygonFit fit;
    fit.centroid = z.mean();
    Complex pf(0.0, 0.0), pb(0.0, 0.0);
    for (int k = 1; k <= n; ++k) {
        const Complex d = z[k - 1] - fit.centroid;
        pf += d * std::polar(1.0, -2.0 * kPi * k / n);
        pb += d * std::polar(1.0, 2.0 * kPi * k / n);
    }
    pf /= static_cast<double>(n);
    pb /= static_cast<double>(n);
    // Residual summed directly (no cancellation against the total).
    double rf = 0.0, rb = 0.0;
    for (int k = 1; k <= n; ++k) {
        const Complex d = z[k - 1] - fit.centroid;
        rf += std::norm(d - pf * std::polar(1.0, 2.0 * kPi * k / n));
        rb += std::norm(d - pb * std::polar(1.0, -2.0 * kPi * k / n));
    }
    fit.residual = std::sqrt(std::min(rf, rb));
    return fit;
}

} // namespace

ClassifyReport classify_orbit(const SystemSpec& spec, const OrbitResult& result,
                              const LoopSample& loop, double triviality_eps, double fit_eps) {
    ClassifyReport rep;
    if (loop.space == LoopSpace::Ambient) return rep;  // Unclassified
    rep.fs_diameter = fs_diameter(loop);
    if (rep.fs_diameter <= triviality_eps) {
        rep.classification = Classification::TrivialRelativeEquilibrium;
        return rep;
    }
    if (spec.family == Family::BEC && loop.space == LoopSpace::CPn1 && spec.identical_gamma()) {
        // Lift each sample back to the ambient scale fixed by the I level.
        const double scale = std::sqrt(result.I_level / spec.gamma[0]);
        double trap_min = std::numeric_limits<double>::infinity();
        double trap_max = -std::numeric_limits<double>::infinity();
        bool fit_ok = true;
        for (const auto& s : loop.samples) {
            const CVec z = scale * s;
            const PolygonFit fit = fit_polygon(z);
            rep.max_fit_residual = std::max(rep.max_fit_residual, fit.residual);
            rep.max_centroid = std::max(rep.max_centroid, std::abs(fit.centroid));
            if (fit.residual >= fit_eps) fit_ok = false;
            double trap = 0.0;
            for (int i = 0; i < spec.n; ++i) {
                const double r2 = std::norm(z[i]);
                if (r2 >= 1.0) { fit_ok = false; break; }
                trap += std::log(1.0 - r2);
            }
            trap_min = std::min(trap_min, trap);
            trap_max = std::max(trap_max, trap);
        }
        rep.trap_variation = trap_max - trap_min;
        if (fit_ok && rep.trap_variation < fit_eps) {
            if (rep.max_centroid < fit_eps) {
                rep.classification = Classification::CentredPolygon;
                return rep;
            }
            // A non-centred persistent polygon with constant trap term is
            // impossible for BEC; flag the contradiction.
            rep.inconsistent_fit = true;
        }
    }
    rep.classification = Classification::NonTrivial;
    return rep;
}

LoopSample assemble_loop(const SystemSpec& spec, const VortexState& Z0, double T_seg,
                         double theta, int samples_per_segment, double tol) {
    if (samples_per_segment < 1)
        throw InvalidConfig("assemble_loop: need at least one sample per segment");
    const int n = spec.n;
    const int m = n * samples_per_segment;
    // Flow the full period so chore_defect of the reduced loop genuinely
    // measures the shift condition Z(t + T/n) = R_theta sigma~ Z(t).
    const Trajectory traj = flow(spec, Z0, n * T_seg, tol, m);
    LoopSample loop;
    loop.space = LoopSpace::Ambient;
    loop.T = n * T_seg;
    loop.n = n;
    loop.samples.reserve(m);
    for (int j = 0; j < m; ++j) loop.samples.push_back(traj.states[j].z);
    return loop;
}

LoopSample reduce_loop(const LoopSample& loop) {
    if (loop.space != LoopSpace::Ambient)
        throw NotApplicable("reduce_loop: loop is already reduced");
    LoopSample out = loop;
    out.space = LoopSpace::CPn1;
    for (auto& s : out.samples) s = hopf_project(s).v;
    return out;
}

} // namespace vortex
