// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "vortex/analysis.hpp"
#include "vortex/choreography.hpp"
#include "vortex/search.hpp"
#include "vortex/spheres.hpp"

using namespace vortex;

namespace {

constexpr double kPi = std::numbers::pi;

int failures = 0;

void report(int criterion, bool pass, const char* detail) {
    std::printf("criterion %2d: %s  (%s)\n", criterion, pass ? "PASS" : "FAIL", detail);
    if (!pass) ++failures;
}

CVec random_cvec(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CVec v(n);
    for (int i = 0; i < n; ++i) v[i] = Complex(gauss(rng), gauss(rng));
    return v;
}

VortexState random_admissible(const SystemSpec& spec, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    const double box = spec.family == Family::BEC ? 0.6 : 1.0;
    while (true) {
        VortexState Z;
        Z.z.resize(spec.n);
        for (int i = 0; i < spec.n; ++i) Z.z[i] = box * Complex(unif(rng), unif(rng));
        if (Z.min_pair_distance() > 0.15) return Z;
    }
}

// 1. Long Euler flow conserves all four invariants and finishes quickly.
void criterion1() {
    std::mt19937_64 rng(1001);
    const SystemSpec spec = SystemSpec::euler(4);
    const VortexState Z0 = random_admissible(spec, rng);
    const auto t0 = std::chrono::steady_clock::now();
    const Trajectory traj = flow(spec, Z0, 50.0, 1e-10, 200);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const auto drift = traj.integral_drift();
    const double worst = std::max({drift.H, drift.I, drift.P, drift.Q});
    char detail[128];
    std::snprintf(detail, sizeof(detail), "max drift %.2e, runtime %.2fs", worst, secs);
    report(1, worst < 1e-8 && secs < 10.0, detail);
}

// 2. The Lim frame is unitary and diagonalizes the cyclic shift, n <= 16.
void criterion2() {
    double worst = 0.0;
    for (int n = 2; n <= 16; ++n) {
        const LimFrame frame(n);
        const Eigen::MatrixXcd& U = frame.U;
        worst = std::max(worst,
                         (U * U.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff());
        Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(n, n);
        for (int j = 0; j < n; ++j) S((j + 1) % n, j) = 1.0;
        const Eigen::MatrixXcd D = U * S * U.adjoint();
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (r != c) worst = std::max(worst, std::abs(D(r, c)));
    }
    char detail[64];
    std::snprintf(detail, sizeof(detail), "max defect %.2e", worst);
    report(2, worst < 1e-13, detail);
}

// 3. Cyclic actions: order n, isometry, commuting P1 diagram, lift independence.
void criterion3() {
    std::mt19937_64 rng(1003);
    double worst = 0.0;
    for (int n = 3; n <= 8; ++n) {
        ProjectivePoint p = hopf_project(random_cvec(n, rng));
        ProjectivePoint q = p;
        for (int k = 0; k < n; ++k) q = sigma1(q);
        worst = std::max(worst, fs_distance(p, q));
        ProjectivePoint r = hopf_project(random_cvec(n - 1, rng));
        ProjectivePoint s = r;
        for (int k = 0; k < n; ++k) s = sigma2(s);
        worst = std::max(worst, fs_distance(r, s));
    }
    std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 6;
        const ProjectivePoint a = hopf_project(random_cvec(n, rng));
        const ProjectivePoint b = hopf_project(random_cvec(n, rng));
        worst = std::max(worst,
                         std::abs(fs_distance(sigma1(a), sigma1(b)) - fs_distance(a, b)));
        const ProjectivePoint c = hopf_project(random_cvec(n - 1, rng));
        const ProjectivePoint d = hopf_project(random_cvec(n - 1, rng));
        worst = std::max(worst,
                         std::abs(fs_distance(sigma2(c), sigma2(d)) - fs_distance(c, d)));
        const CVec Z = random_cvec(n, rng);
        worst = std::max(worst,
                         fs_distance(hopf_project(cyclic_shift(Z)), sigma1(hopf_project(Z))));
        const CVec v = random_cvec(n - 1, rng);
        worst = std::max(worst, fs_distance(sigma2(hopf_project(v)),
                                            sigma2(hopf_project(CVec(std::polar(1.0, ang(rng)) * v)))));
    }
    char detail[64];
    std::snprintf(detail, sizeof(detail), "max defect %.2e", worst);
    report(3, worst < 1e-12, detail);
}

// 4. Explicit spheres: equivariance, endpoint matching, degree-1 area.
void criterion4() {
    std::mt19937_64 rng(1004);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double worst_eq = 0.0, worst_end = 0.0, worst_area = 0.0;
    auto check = [&](int n, SphereTarget target) {
        const SphereMap s = SphereMap::make(n, target);
        std::vector<ExtComplex> pts{ExtComplex::finite({0, 0}), ExtComplex::infinity()};
        for (int i = 0; i < 100; ++i)
            pts.push_back(ExtComplex::finite(Complex(gauss(rng), gauss(rng))));
        worst_eq = std::max(worst_eq, equivariance_defect(s, pts));
        const ProjectivePoint at0 = evaluate_sphere(s, ExtComplex::finite({0, 0}));
        const ProjectivePoint atInf = evaluate_sphere(s, ExtComplex::infinity());
        if (target == SphereTarget::CPn1) {
            worst_end = std::max({worst_end, fs_distance(at0, s.B), fs_distance(atInf, s.A)});
        } else {
            worst_end = std::max({worst_end, fs_distance(at0, s.A), fs_distance(atInf, s.B)});
        }
        worst_area = std::max(worst_area, std::abs(fs_area(s, AreaRegion::Full) - kPi));
    };
    for (int n = 3; n <= 12; ++n) check(n, SphereTarget::CPn1);
    for (int n = 4; n <= 12; n += 2) check(n, SphereTarget::CPn2);
    char detail[128];
    std::snprintf(detail, sizeof(detail), "equivariance %.2e, endpoints %.2e, |area-pi| %.2e",
                  worst_eq, worst_end, worst_area);
    report(4, worst_eq < 1e-12 && worst_end < 1e-12 && worst_area < 1e-6, detail);
}

// 5. Thomson n-gons: equilibrium residual, phase-rate oracle, point reduced loop.
void criterion5() {
    double worst_res = 0.0, worst_omega = 0.0, worst_diam = 0.0;
    for (int n = 2; n <= 8; ++n) {
        const SystemSpec spec = SystemSpec::euler(n);
        const VortexState Z0 = regular_ngon(n, 1.0, -2 * kPi / n);  // pins z_1 = 1
        const double I0 = first_integrals(spec, Z0).I;
        const RelativeEquilibrium re = find_relative_equilibrium(spec, Z0, I0);
        worst_res = std::max(worst_res, re.residual);
        const double dt = 1e-3;
        const VortexState Zt = flow_final(spec, re.Z, dt, 1e-13);
        worst_omega = std::max(worst_omega, std::abs(re.omega - std::arg(Zt.z[0] / re.Z.z[0]) / dt));
        const double T_seg = 2 * kPi / (n * std::abs(re.omega));
        const LoopSample loop = assemble_loop(spec, re.Z, T_seg, 0.0, 8, 1e-13);
        worst_diam = std::max(worst_diam, fs_diameter(reduce_loop(loop)));
    }
    char detail[128];
    std::snprintf(detail, sizeof(detail), "residual %.2e, omega gap %.2e, fs diameter %.2e",
                  worst_res, worst_omega, worst_diam);
    report(5, worst_res < 1e-10 && worst_omega < 1e-8 && worst_diam < 1e-10, detail);
}

// 6. Regular n-gon maximizes the chord-log sum; constrained criticality.
void criterion6() {
    double worst_margin = 0.0, worst_grad = 0.0;
    for (int n = 3; n <= 8; ++n) {
        const MaximalityReport rep = ngon_maximality_test(n, 1.0, 10000, 2000 + n);
        worst_margin = std::min(worst_margin, rep.margin);  // must stay >= 0
        worst_grad = std::max(worst_grad, rep.projected_gradient_norm);
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "min margin %.2e, gradient %.2e", worst_margin,
                  worst_grad);
    report(6, worst_margin >= 0.0 && worst_grad < 1e-10, detail);
}

// 7. Trap coefficient: dense-grid oracle, vanishing beta slice, closed form.
void criterion7() {
    double worst_oracle = 0.0, worst_zero = 0.0, worst_closed = 0.0;
    for (int n = 2; n <= 6; ++n) {
        for (int ia = 0; ia < 10; ++ia) {
            const double alpha = -1.0 + 0.45 * ia;
            worst_zero = std::max(worst_zero, polygon_trap_coefficient(alpha, 0.0, n));
            for (int ib = 0; ib < 10; ++ib) {
                const double beta = -1.2 + 0.3 * ib;
                const double got = polygon_trap_coefficient(alpha, beta, n);
                const int M = 4096;
                double an = 0.0, bn = 0.0;
                for (int j = 0; j < M; ++j) {
                    const double th = 2.0 * kPi * j / M;
                    double f = 1.0;
                    for (int k = 0; k < n; ++k) f *= alpha + beta * std::cos(th + 2.0 * kPi * k / n);
                    an += f * std::cos(n * th);
                    bn += f * std::sin(n * th);
                }
                const double oracle = std::hypot(an * 2.0 / M, bn * 2.0 / M);
                worst_oracle = std::max(worst_oracle, std::abs(got - oracle));
                worst_closed = std::max(
                    worst_closed, std::abs(got - 2.0 * std::pow(std::abs(beta) / 2.0, n)));
            }
        }
    }
    char detail[128];
    std::snprintf(detail, sizeof(detail), "oracle gap %.2e, beta=0 slice %.2e, closed form %.2e",
                  worst_oracle, worst_zero, worst_closed);
    report(7, worst_oracle < 1e-10 && worst_zero < 1e-14 && worst_closed < 1e-9, detail);
}

// 8. Shub separation scan on the BEC disc, 200 starts.
void criterion8() {
    const SystemSpec spec = SystemSpec::bec(3, 1.0, 1.0);
    const ShubScanReport rep = shub_separation_scan(spec, 0.3, 200, 1008);
    bool all_separated = rep.converged > 0;
    for (double s : rep.separations)
        if (!(s > 1e-3 * 1e-3)) all_separated = false;  // squared distance vs 1e-3
    char detail[128];
    std::snprintf(detail, sizeof(detail), "%d/%d converged, epsilon_hat %.3e, residual %.2e",
                  rep.converged, rep.n_starts, rep.epsilon_hat, rep.max_residual);
    report(8, rep.pass && rep.hypothesis_ok && all_separated && rep.epsilon_hat > 0.0, detail);
}

// 9. Search contract, the zero-perturbation equilibrium, and determinism.
void criterion9() {
    bool ok = true;
    char detail[128] = "contract, equilibrium, determinism all hold";

    const SystemSpec bec = SystemSpec::bec(3, 1.0, 1.0);
    SearchConfig cfg;
    cfg.I_level = 0.3;
    cfg.n_starts = 4;
    cfg.seed = 9;
    cfg.perturbation_scale = 0.05;
    const SearchReport rep = search(bec, cfg);
    if (rep.results.empty()) ok = false;
    for (const auto& orb : rep.results) {
        if (!(orb.residual < cfg.newton_tol)) ok = false;
        if (!(orb.chore_defect < 10 * cfg.newton_tol)) ok = false;
        const LoopSample loop = assemble_loop(bec, orb.Z0, orb.T_seg, orb.theta,
                                              cfg.samples_per_segment, cfg.flow_tol);
        for (const auto& z : loop.samples) {
            VortexState st;
            st.z = z;
            const FirstIntegrals fi = first_integrals(bec, st);
            if (!(std::abs(fi.H - orb.energy) < 10 * cfg.newton_tol)) ok = false;
            if (!(std::abs(fi.I - orb.I_level) < 10 * cfg.newton_tol)) ok = false;
        }
    }

    const SystemSpec euler = SystemSpec::euler(4);
    SearchConfig zero;
    zero.I_level = 4.0;
    zero.n_starts = 1;
    zero.perturbation_scale = 0.0;
    const SearchReport eq = search(euler, zero);
    if (eq.results.size() != 1 ||
        eq.results[0].classification != Classification::TrivialRelativeEquilibrium ||
        !(eq.results[0].residual < zero.newton_tol))
        ok = false;

    const SearchReport again = search(bec, cfg);
    if (again.results.size() != rep.results.size()) ok = false;
    for (std::size_t i = 0; ok && i < rep.results.size(); ++i) {
        if (again.results[i].residual != rep.results[i].residual ||
            (again.results[i].Z0.z - rep.results[i].Z0.z).norm() != 0.0)
            ok = false;
    }
    if (!ok) std::snprintf(detail, sizeof(detail), "a sub-check failed");
    report(9, ok, detail);
}

// 10. Flow equivariance under the cyclic shift over T = 10. Starts are kept
// well separated so error amplification stays below the 1e-8 budget.
void criterion10() {
    std::mt19937_64 rng(1010);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    double worst = 0.0;
    const SystemSpec specs[] = {SystemSpec::euler(4), SystemSpec::bec(3, 1.0, 1.0)};
    for (const auto& spec : specs) {
        const double box = spec.family == Family::BEC ? 0.42 : 1.0;
        const double min_sep = spec.family == Family::BEC ? 0.32 : 0.6;
        for (int trial = 0; trial < 20; ++trial) {
            VortexState Z0;
            do {
                Z0.z.resize(spec.n);
                for (int i = 0; i < spec.n; ++i) Z0.z[i] = box * Complex(unif(rng), unif(rng));
            } while (Z0.min_pair_distance() < min_sep);
            VortexState SZ0;
            SZ0.z = cyclic_shift(Z0.z);
            const VortexState a = flow_final(spec, SZ0, 10.0, 1e-13);
            const VortexState b = flow_final(spec, Z0, 10.0, 1e-13);
            worst = std::max(worst, (a.z - cyclic_shift(b.z)).norm());
        }
    }
    char detail[64];
    std::snprintf(detail, sizeof(detail), "max defect %.2e", worst);
    report(10, worst < 1e-8, detail);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (failures) {
        std::printf("acceptance: %d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("acceptance: all criteria passed\n");
    return 0;
}
