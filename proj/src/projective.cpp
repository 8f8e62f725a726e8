#include "vortex/projective.hpp"

#include <cmath>
#include <numbers>

namespace vortex {

namespace {
constexpr double kPi = std::numbers::pi;
}

ProjectivePoint hopf_project(const CVec& Z) {
    const double norm = Z.norm();
    if (norm == 0.0) throw ZeroVector("hopf_project: zero vector");
    return ProjectivePoint{Z / norm};
}

ProjectivePoint hopf_project(const VortexState& Z) { return hopf_project(Z.z); }

double fs_distance(const ProjectivePoint& p, const ProjectivePoint& q) {
    if (p.v.size() != q.v.size())
        throw DimensionMismatch("fs_distance: points live in different spaces");
    // atan2 of the orthogonal component against |<p,q>| equals
    // arccos(|<p,q>|) for unit representatives but stays accurate near 0.
    const Complex inner = p.v.dot(q.v);
    const CVec orth = q.v - p.v * inner;
    return std::atan2(orth.norm(), std::abs(inner));
}

LimFrame::LimFrame(int n_) : n(n_), U(n_, n_) {
    if (n < 2) throw InvalidConfig("LimFrame: n must be at least 2");
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    for (int k = 1; k <= n; ++k)
        for (int j = 1; j <= n; ++j)
            U(k - 1, j - 1) = s * std::polar(1.0, -2.0 * kPi * j * k / n);
}

CVec lim_transform(const LimFrame& frame, const CVec& Z, LimDirection direction) {
    if (Z.size() != frame.n)
        throw DimensionMismatch("lim_transform: vector length differs from frame size");
    if (direction == LimDirection::Forward) return frame.U * Z;
    return frame.U.adjoint() * Z;
}

ProjectivePoint sigma1(const ProjectivePoint& p) {
    return ProjectivePoint{cyclic_shift(p.v)};
}

ProjectivePoint sigma2(const ProjectivePoint& q) {
    const int n = static_cast<int>(q.v.size()) + 1;
    LimFrame frame(n);
    CVec W = CVec::Zero(n);
    W.head(n - 1) = q.v;
    const CVec Z = lim_transform(frame, W, LimDirection::Inverse);
    const CVec Wp = lim_transform(frame, cyclic_shift(Z), LimDirection::Forward);
    // The shift preserves the centroid, so the last Lim coordinate stays zero.
    return hopf_project(CVec(Wp.head(n - 1)));
}

ProjectivePoint sigma2_diagonal(const ProjectivePoint& q) {
    const int n = static_cast<int>(q.v.size()) + 1;
    CVec out(q.v.size());
    for (int k = 1; k <= n - 1; ++k)
        out[k - 1] = std::polar(1.0, -2.0 * kPi * k / n) * q.v[k - 1];
    return ProjectivePoint{out};
}

} // namespace vortex
