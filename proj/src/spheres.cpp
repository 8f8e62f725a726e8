#include "vortex/spheres.hpp"

#include <cmath>
#include <numbers>

namespace vortex {

namespace {
constexpr double kPi = std::numbers::pi;

// Homogeneous pencil coefficients: lift(z) = z * c1 + c0 on the finite chart.
struct Pencil {
    CVec c1;
    CVec c0;
};

Pencil pencil_of(const SphereMap& s) {
    // Unit-norm lifts of the stored endpoints; the canonical pairs are scaled
    // uniformly so this is projectively the textbook pencil.
    if (s.target == SphereTarget::CPn1) {
        // [eta_A : eta_B] = [zeta z : 1]: u = eta_A * A + eta_B * B
        return Pencil{s.moebius_scale * s.A.v, s.B.v};
    }
    // CPn2: [eta_B : eta_A] = [zeta z : 1]: u = eta_B * B + eta_A * A
    return Pencil{s.moebius_scale * s.B.v, s.A.v};
}

ProjectivePoint sigma_of(SphereTarget target, const ProjectivePoint& p) {
    return target == SphereTarget::CPn1 ? sigma1(p) : sigma2(p);
}

// Fubini-Study area density of an affine pencil lift v(z) = z*c1 + c0,
// normalized so that a full projective line has area pi.
double pencil_density(const Pencil& p, Complex z) {
    const CVec v = z * p.c1 + p.c0;
    const double v2 = v.squaredNorm();
    const double d2 = p.c1.squaredNorm();
    const double mix = std::norm(v.dot(p.c1));
    return (v2 * d2 - mix) / (v2 * v2);
}

// Integral of the density over the unit disc, polar grid: periodic trapezoid
// in angle, composite Gauss-Legendre (16-point) in radius.
double disc_integral(const Pencil& p, int n_phi, int n_rad_panels) {
    static const double gl_x[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                                   0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                                   0.9445750230732326, 0.9894009349916499};
    static const double gl_w[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                                   0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                                   0.0622535239386479, 0.0271524594117541};
    double total = 0.0;
    for (int iphi = 0; iphi < n_phi; ++iphi) {
        const double phi = 2.0 * kPi * iphi / n_phi;
        const Complex dir = std::polar(1.0, phi);
        double ray = 0.0;
        for (int panel = 0; panel < n_rad_panels; ++panel) {
            const double a = static_cast<double>(panel) / n_rad_panels;
            const double b = static_cast<double>(panel + 1) / n_rad_panels;
            const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
            for (int g = 0; g < 8; ++g) {
                for (int sgn : {-1, 1}) {
                    const double r = mid + sgn * half * gl_x[g];
                    ray += half * gl_w[g] * r * pencil_density(p, r * dir);
                }
            }
        }
        total += ray;
    }
    return total * 2.0 * kPi / n_phi;
}

double disc_area_adaptive(const Pencil& p, double quad_tol) {
    int n_phi = 64, n_panels = 4;
    double prev = disc_integral(p, n_phi, n_panels);
    for (int level = 0; level < 8; ++level) {
        n_phi *= 2;
        n_panels *= 2;
        const double cur = disc_integral(p, n_phi, n_panels);
        if (std::abs(cur - prev) < 0.5 * quad_tol) return cur;
        prev = cur;
    }
    throw QuadratureFailure("fs_area: error estimate above quad_tol");
}

Pencil inverted_chart(const Pencil& p) {
    // w = 1/z, lift cleared of the pole: v(1/w)*w = c1 + w*c0.
    return Pencil{p.c0, p.c1};
}

} // namespace

EndpointPair make_configurations(int n, SphereTarget target) {
    if (n < 2) throw InvalidConfig("make_configurations: n must be at least 2");
    EndpointPair out;
    if (target == SphereTarget::CPn1) {
        CVec a = CVec::Constant(n, Complex(1.0, 0.0));
        CVec b(n);
        for (int k = 1; k <= n; ++k) b[k - 1] = std::polar(1.0, 2.0 * kPi * k / n);
        out.A = hopf_project(a);
        out.B = hopf_project(b);
        return out;
    }
    if (n % 2 != 0) throw InvalidConfig("make_configurations: CPn2 requires even n");
    const int m = n / 2;
    CVec ZA(n), ZB(n);
    for (int j = 1; j <= n; ++j) {
        ZA[j - 1] = std::polar(1.0, 2.0 * kPi * j / m);  // doubled m-gon, centroid 0
        ZB[j - 1] = std::polar(1.0, 2.0 * kPi * j / n);
    }
    LimFrame frame(n);
    const CVec WA = lim_transform(frame, ZA, LimDirection::Forward);
    const CVec WB = lim_transform(frame, ZB, LimDirection::Forward);
    out.A = hopf_project(CVec(WA.head(n - 1)));
    out.B = hopf_project(CVec(WB.head(n - 1)));
    return out;
}

SphereMap SphereMap::make(int n, SphereTarget target, Complex moebius_scale) {
    if (moebius_scale == Complex(0.0, 0.0))
        throw InvalidConfig("SphereMap: moebius_scale must be nonzero");
    const EndpointPair ends = make_configurations(n, target);
    return SphereMap{n, target, ends.A, ends.B, moebius_scale};
}

ProjectivePoint evaluate_sphere(const SphereMap& s, const ExtComplex& z) {
    const Pencil p = pencil_of(s);
    if (z.infinite) return hopf_project(p.c1);
    return hopf_project(CVec(z.value * p.c1 + p.c0));
}

double equivariance_defect(const SphereMap& s, const std::vector<ExtComplex>& samples) {
    if (samples.empty()) throw InvalidConfig("equivariance_defect: no samples");
    const Complex tau = std::polar(1.0, 2.0 * kPi / s.n);
    double defect = 0.0;
    for (const auto& z : samples) {
        const ExtComplex tz = z.infinite ? z : ExtComplex::finite(tau * z.value);
        const ProjectivePoint lhs = evaluate_sphere(s, tz);
        const ProjectivePoint rhs = sigma_of(s.target, evaluate_sphere(s, z));
        defect = std::max(defect, fs_distance(lhs, rhs));
    }
    return defect;
}

double fs_area(const SphereMap& s, AreaRegion region, double quad_tol) {
    if (!(quad_tol > 0.0)) throw InvalidConfig("fs_area: quad_tol must be positive");
    const Pencil p = pencil_of(s);
    const double disc = disc_area_adaptive(p, quad_tol);
    if (region == AreaRegion::UnitDisc) return disc;
    return disc + disc_area_adaptive(inverted_chart(p), quad_tol);
}

Complex fit_moebius_scale(const SphereMap& s, double target_area, double quad_tol) {
    if (!(target_area > 0.0) || !(target_area < kPi))
        throw InvalidConfig("fit_moebius_scale: target area must be in (0, pi)");
    const double phase = std::arg(s.moebius_scale);
    auto area_at = [&](double mag) {
        SphereMap t = s;
        t.moebius_scale = std::polar(mag, phase);
        return fs_area(t, AreaRegion::UnitDisc, quad_tol);
    };
    double lo = 1.0, hi = 1.0;
    while (area_at(lo) > target_area) lo *= 0.5;
    while (area_at(hi) < target_area) hi *= 2.0;
    for (int i = 0; i < 60 && hi - lo > 1e-14 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (area_at(mid) < target_area ? lo : hi) = mid;
    }
    return std::polar(0.5 * (lo + hi), phase);
}

} // namespace vortex
