#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "vortex/choreography.hpp"

using namespace vortex;

namespace {

constexpr double kPi = std::numbers::pi;

double ngon_omega(int n, double R) { return (n - 1) / (4 * kPi * R * R); }

// Analytic clockwise n-gon choreography: z_k(t) = R e^{i(2 pi k/n - 2 pi t/T)}.
// Exactly g-fixed: sigma~ Z(t - T/n) = Z(t).
LoopSample analytic_ngon_loop(int n, double R, int m, double T = 2 * kPi) {
    LoopSample loop;
    loop.space = LoopSpace::Ambient;
    loop.T = T;
    loop.n = n;
    for (int j = 0; j < m; ++j) {
        CVec z(n);
        for (int k = 1; k <= n; ++k)
            z[k - 1] = R * std::polar(1.0, 2 * kPi * k / n - 2 * kPi * j / m);
        loop.samples.push_back(z);
    }
    return loop;
}

LoopSample random_loop(int n, int m, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    LoopSample loop;
    loop.space = LoopSpace::Ambient;
    loop.T = 1.0;
    loop.n = n;
    for (int j = 0; j < m; ++j) {
        CVec z(n);
        for (int k = 0; k < n; ++k) z[k] = Complex(gauss(rng), gauss(rng));
        loop.samples.push_back(z);
    }
    return loop;
}

} // namespace

TEST_CASE("apply_g fixes a constant loop at a sigma-fixed point") {
    const int n = 5, m = 20;
    LoopSample loop;
    loop.space = LoopSpace::CPn1;
    loop.T = 1.0;
    loop.n = n;
    CVec B(n);
    for (int k = 1; k <= n; ++k) B[k - 1] = std::polar(1.0 / std::sqrt(double(n)), 2 * kPi * k / n);
    for (int j = 0; j < m; ++j) loop.samples.push_back(B);
    CHECK(chore_defect(loop) < 1e-13);
}

TEST_CASE("apply_g has order n on the grid") {
    std::mt19937_64 rng(41);
    const int n = 4, m = 12;
    const LoopSample loop = random_loop(n, m, rng);
    LoopSample it = loop;
    for (int k = 0; k < n; ++k) it = apply_g(it);
    for (int j = 0; j < m; ++j) CHECK((it.samples[j] - loop.samples[j]).norm() == 0.0);
}

TEST_CASE("analytic thomson loop is a choreography") {
    const LoopSample loop = analytic_ngon_loop(4, 1.3, 24);
    CHECK(chore_defect(loop) < 1e-12);
    // Defect is g-invariant.
    std::mt19937_64 rng(42);
    const LoopSample noisy = random_loop(3, 12, rng);
    CHECK(chore_defect(apply_g(noisy)) == doctest::Approx(chore_defect(noisy)).epsilon(1e-12));
}

TEST_CASE("grid mismatch is rejected") {
    std::mt19937_64 rng(43);
    const LoopSample loop = random_loop(4, 10, rng);  // 4 does not divide 10
    CHECK_THROWS_AS(chore_defect(loop), GridMismatch);
}

TEST_CASE("perturbing one particle's path shows up in the defect") {
    const int n = 3, m = 12;
    LoopSample loop = analytic_ngon_loop(n, 1.0, m);
    const double delta = 0.01;
    for (int j = 0; j < m; ++j) loop.samples[j][0] += delta;
    CHECK(chore_defect(loop) >= delta / 2);
}

TEST_CASE("symmetrize produces g-fixed loops and is idempotent") {
    std::mt19937_64 rng(44);
    const LoopSample loop = random_loop(4, 16, rng);
    const LoopSample sym = symmetrize(loop);
    CHECK(chore_defect(sym) < 1e-12);
    const LoopSample sym2 = symmetrize(sym);
    for (int j = 0; j < sym.m(); ++j) CHECK((sym2.samples[j] - sym.samples[j]).norm() < 1e-12);

    const LoopSample chor = analytic_ngon_loop(4, 1.0, 16);
    const LoopSample symc = symmetrize(chor);
    for (int j = 0; j < chor.m(); ++j) CHECK((symc.samples[j] - chor.samples[j]).norm() < 1e-13);

    LoopSample reduced = reduce_loop(loop);
    CHECK_THROWS_AS(symmetrize(reduced), NotApplicable);
}

TEST_CASE("shooting residual vanishes on the thomson relation") {
    const int n = 4;
    const double R = 1.0;
    const SystemSpec spec = SystemSpec::euler(n);
    const VortexState Z0 = regular_ngon(n, R);
    const double omega = ngon_omega(n, R);
    const double T_seg = 0.8;
    const double theta = omega * T_seg + 2 * kPi / n;
    const RVec r = shooting_residual(spec, Z0, T_seg, theta);
    CHECK(r.norm() < 1e-9);

    // First-order sensitivity in theta.
    const double delta = 1e-4;
    const RVec rd = shooting_residual(spec, Z0, T_seg, theta + delta);
    CHECK(rd.norm() == doctest::Approx(delta * Z0.z.norm()).epsilon(1e-3));
}

TEST_CASE("zero-time shooting residual compares Z0 with its shift") {
    std::mt19937_64 rng(45);
    const SystemSpec spec = SystemSpec::euler(3);
    VortexState Z0;
    Z0.z.resize(3);
    Z0.z << Complex(0.9, 0.1), Complex(-0.4, 0.7), Complex(-0.3, -0.8);
    const RVec r = shooting_residual(spec, Z0, 0.0, 0.0);
    const CVec d = Z0.z - cyclic_shift(Z0.z);
    CHECK(r.norm() == doctest::Approx(d.norm()).epsilon(1e-14));
    CHECK(r.norm() > 0.1);
}

TEST_CASE("shooting residual is sigma-equivariant for identical vorticities") {
    const SystemSpec spec = SystemSpec::euler(4);
    VortexState Z0;
    Z0.z.resize(4);
    Z0.z << Complex(1.1, 0.0), Complex(0.1, 0.9), Complex(-1.0, 0.2), Complex(-0.1, -1.0);
    const double T_seg = 0.7, theta = 0.9;
    const RVec r = shooting_residual(spec, Z0, T_seg, theta, 1e-12);
    VortexState SZ0;
    SZ0.z = cyclic_shift(Z0.z);
    const RVec rs = shooting_residual(spec, SZ0, T_seg, theta, 1e-12);
    // Repack r as complex, shift, compare.
    CVec rc(4), rsc(4);
    for (int i = 0; i < 4; ++i) {
        rc[i] = Complex(r[2 * i], r[2 * i + 1]);
        rsc[i] = Complex(rs[2 * i], rs[2 * i + 1]);
    }
    CHECK((rsc - cyclic_shift(rc)).norm() < 1e-10);
}

TEST_CASE("frame angle recovery") {
    std::mt19937_64 rng(46);
    std::normal_distribution<double> gauss(0.0, 1.0);
    VortexState Zs;
    Zs.z.resize(5);
    for (int i = 0; i < 5; ++i) Zs.z[i] = Complex(gauss(rng), gauss(rng));

    const double phi = 2.13;
    VortexState Ze;
    Ze.z = std::polar(1.0, phi) * cyclic_shift(Zs.z);
    const FrameAngle fa = frame_angle(Zs, Ze);
    CHECK(std::abs(std::remainder(fa.angle - phi, 2 * kPi)) < 1e-12);
    CHECK(fa.mismatch < 1e-12);

    VortexState Zshift;
    Zshift.z = cyclic_shift(Zs.z);
    CHECK(std::abs(frame_angle(Zs, Zshift).angle) < 1e-13);

    // Generic pair: compare against brute-force minimization over 1e6 angles.
    VortexState Zg;
    Zg.z.resize(5);
    for (int i = 0; i < 5; ++i) Zg.z[i] = Complex(gauss(rng), gauss(rng));
    const FrameAngle gen = frame_angle(Zs, Zg);
    double best = std::numeric_limits<double>::infinity(), best_a = 0.0;
    const CVec shifted = cyclic_shift(Zs.z);
    for (int k = 0; k < 1000000; ++k) {
        const double a = 2 * kPi * k / 1000000 - kPi;
        const double v = (std::polar(1.0, a) * shifted - Zg.z).norm();
        if (v < best) {
            best = v;
            best_a = a;
        }
    }
    CHECK(std::abs(std::remainder(gen.angle - best_a, 2 * kPi)) < 1e-5);
    CHECK(gen.mismatch <= best + 1e-12);

    VortexState zero;
    zero.z = CVec::Zero(5);
    CHECK_THROWS_AS(frame_angle(zero, Zs), DegenerateInput);
}

TEST_CASE("classification: point loop is a trivial relative equilibrium") {
    const SystemSpec spec = SystemSpec::euler(3);
    const LoopSample reduced = reduce_loop(analytic_ngon_loop(3, 1.0, 12));
    CHECK(fs_diameter(reduced) < 1e-13);
    OrbitResult orb;
    orb.spec = spec;
    orb.I_level = 3.0;
    const ClassifyReport rep = classify_orbit(spec, orb, reduced);
    CHECK(rep.classification == Classification::TrivialRelativeEquilibrium);
}

TEST_CASE("classification: constructed centred BEC polygon") {
    // A rotating centred n-gon reduces to a point; force the polygon branch by
    // passing a triviality threshold below the numerical diameter floor.
    const SystemSpec spec = SystemSpec::bec(4, 1.0, 1.0);
    LoopSample loop = analytic_ngon_loop(4, 0.4, 16);
    const LoopSample reduced = reduce_loop(loop);
    OrbitResult orb;
    orb.spec = spec;
    orb.I_level = 4 * 0.4 * 0.4;
    const ClassifyReport rep = classify_orbit(spec, orb, reduced, /*triviality_eps=*/0.0);
    CHECK(rep.classification == Classification::CentredPolygon);
    CHECK_FALSE(rep.inconsistent_fit);
}

TEST_CASE("classification: large non-polygonal loop is non-trivial") {
    std::mt19937_64 rng(47);
    const SystemSpec spec = SystemSpec::bec(4, 1.0, 1.0);
    LoopSample loop = random_loop(4, 16, rng);
    const LoopSample reduced = reduce_loop(loop);
    OrbitResult orb;
    orb.spec = spec;
    orb.I_level = 0.3;
    const ClassifyReport rep = classify_orbit(spec, orb, reduced);
    REQUIRE(rep.fs_diameter > 1e-3);
    CHECK(rep.classification == Classification::NonTrivial);
}

TEST_CASE("assembled loop of a shooting zero is a reduced choreography") {
    const int n = 4;
    const SystemSpec spec = SystemSpec::euler(n);
    const VortexState Z0 = regular_ngon(n, 1.0);
    const double omega = ngon_omega(n, 1.0);
    const double T_seg = 2 * kPi / (n * omega);
    const double theta = omega * T_seg + 2 * kPi / n;
    REQUIRE(shooting_residual(spec, Z0, T_seg, theta).norm() < 1e-9);
    const LoopSample loop = assemble_loop(spec, Z0, T_seg, theta, 12);
    const LoopSample reduced = reduce_loop(loop);
    CHECK(chore_defect(reduced) <= 1e-8);
}
