#include "vortex/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "vortex/threading.hpp"

namespace vortex {

namespace {
constexpr double kPi = std::numbers::pi;

// Unknowns: 2n coordinates of Z0, then T_seg, then theta.
struct Unknowns {
    RVec x;
    int n;

    VortexState state() const {
        VortexState Z;
        Z.z.resize(n);
        for (int i = 0; i < n; ++i) Z.z[i] = Complex(x[2 * i], x[2 * i + 1]);
        return Z;
    }
    double T_seg() const { return x[2 * n]; }
    double theta() const { return x[2 * n + 1]; }
};

RVec full_residual(const SystemSpec& spec, const SearchConfig& cfg, const Unknowns& u) {
    const int n = spec.n;
    const VortexState Z0 = u.state();
    if (u.T_seg() <= 0.0) throw InvalidConfig("T_seg left the positive range");
    RVec shoot = shooting_residual(spec, Z0, u.T_seg(), u.theta(), cfg.flow_tol);
    const FirstIntegrals fi = first_integrals(spec, Z0);
    int extra = 2 + (cfg.centred ? 2 : 0) + (cfg.energy_target ? 1 : 0);
    RVec r(2 * n + extra);
    r.head(2 * n) = shoot;
    int at = 2 * n;
    r[at++] = fi.I - cfg.I_level;
    r[at++] = Z0.z[0].imag();  // phase pin
    if (cfg.centred) {
        r[at++] = fi.P;
        r[at++] = fi.Q;
    }
    if (cfg.energy_target) r[at++] = fi.H - *cfg.energy_target;
    return r;
}

struct GNResult {
    bool converged = false;
    Unknowns u;
    double residual_norm = 0.0;
    std::string failure;
};

GNResult gauss_newton(const SystemSpec& spec, const SearchConfig& cfg, Unknowns u) {
    GNResult out;
    out.u = u;
    RVec r;
    try {
        r = full_residual(spec, cfg, u);
    } catch (const Error& e) {
        out.failure = e.what();
        return out;
    }
    for (int iter = 0; iter < cfg.max_iter; ++iter) {
        if (r.norm() < cfg.newton_tol) break;
        Eigen::MatrixXd J(r.size(), u.x.size());
        bool jac_ok = true;
        for (int k = 0; k < u.x.size(); ++k) {
            const double h = 1e-7 * std::max(1.0, std::abs(u.x[k]));
            Unknowns up = u;
            up.x[k] += h;
            try {
                J.col(k) = (full_residual(spec, cfg, up) - r) / h;
            } catch (const Error&) {
                jac_ok = false;
                break;
            }
        }
        if (!jac_ok) {
            out.failure = "Jacobian evaluation left the admissible set";
            return out;
        }
        const RVec step = J.colPivHouseholderQr().solve(-r);
        double alpha = 1.0;
        bool improved = false;
        for (int ls = 0; ls < 25; ++ls) {
            Unknowns ut = u;
            ut.x += alpha * step;
            try {
                RVec rt = full_residual(spec, cfg, ut);
                if (rt.norm() < r.norm()) {
                    u = ut;
                    r = rt;
                    improved = true;
                    break;
                }
            } catch (const Error&) {
                // shrink
            }
            alpha *= 0.5;
        }
        if (!improved) {
            out.failure = "line search stalled";
            out.u = u;
            out.residual_norm = r.norm();
            return out;
        }
    }
    out.u = u;
    out.residual_norm = r.norm();
    out.converged = r.norm() < cfg.newton_tol;
    if (!out.converged && out.failure.empty())
        out.failure = "residual above newton_tol after max_iter";
    return out;
}

VortexState seed_state(const SystemSpec& spec, const SearchConfig& cfg, std::mt19937_64& rng) {
    const int n = spec.n;
    const double R = std::sqrt(cfg.I_level / (n * spec.gamma[0]));
    VortexState Z;
    if (cfg.doubled_seed && n % 2 == 0) {
        // Two slightly split copies of the (n/2)-gon, near the binary
        // total collision configuration.
        const int m = n / 2;
        const double split = std::max(cfg.perturbation_scale, 0.02);
        Z.z.resize(n);
        for (int j = 0; j < n; ++j) {
            const double base = 2.0 * kPi * ((j % m) + 1) / m;
            const double off = (j < m) ? split : -split;
            Z.z[j] = R * std::polar(1.0, base + off);
        }
    } else {
        Z = regular_ngon(n, R);
    }
    if (cfg.perturbation_scale > 0.0) {
        std::normal_distribution<double> gauss(0.0, 1.0);
        CVec d(n);
        for (int i = 0; i < n; ++i) d[i] = Complex(gauss(rng), gauss(rng));
        d /= d.norm();
        Z.z += cfg.perturbation_scale * R * d;
    }
    if (cfg.centred) {
        const Complex c = Z.z.mean();
        for (int i = 0; i < n; ++i) Z.z[i] -= c;
    }
    // Rescale to the exact I level and apply the phase pin.
    double I = 0.0;
    for (int i = 0; i < n; ++i) I += spec.gamma[i] * std::norm(Z.z[i]);
    Z.z *= std::sqrt(cfg.I_level / I);
    if (std::abs(Z.z[0]) > 0.0) Z.z *= std::conj(Z.z[0]) / std::abs(Z.z[0]);
    return Z;
}

} // namespace

void SearchConfig::validate() const {
    if (!(I_level > 0.0)) throw InvalidConfig("SearchConfig: I_level must be positive");
    if (!(newton_tol > 0.0)) throw InvalidConfig("SearchConfig: newton_tol must be positive");
    if (n_starts < 0) throw InvalidConfig("SearchConfig: n_starts must be non-negative");
    if (T_seg_range.first < 0.0 || T_seg_range.second < T_seg_range.first)
        throw InvalidConfig("SearchConfig: invalid T_seg_range");
    if (samples_per_segment < 2)
        throw InvalidConfig("SearchConfig: samples_per_segment must be at least 2");
}

SearchReport search(const SystemSpec& spec, const SearchConfig& cfg) {
    cfg.validate();
    if (!spec.identical_gamma())
        throw InvalidConfig("search: identical vorticities are required for choreographies");
    if (spec.n < 2) throw InvalidConfig("search: n must be at least 2");
    const int n = spec.n;

    // Reference rotation rate of the n-gon at this I level.
    const double R = std::sqrt(cfg.I_level / (n * spec.gamma[0]));
    const double omega_ngon = fit_omega(spec, regular_ngon(n, R));
    const double T_seg_ref = 2.0 * kPi / (std::abs(omega_ngon) * n);

    SearchReport report;
    report.starts.resize(cfg.n_starts);
    std::vector<std::optional<OrbitResult>> found(cfg.n_starts);

    parallel_for(static_cast<std::size_t>(cfg.n_starts), [&](std::size_t s) {
        StartReport& sr = report.starts[s];
        sr.start_index = static_cast<int>(s);
        std::mt19937_64 rng(cfg.seed + 0x9e3779b97f4a7c15ULL * (s + 1));
        try {
            Unknowns u;
            u.n = n;
            u.x.resize(2 * n + 2);
            const VortexState Z0 = seed_state(spec, cfg, rng);
            for (int i = 0; i < n; ++i) {
                u.x[2 * i] = Z0.z[i].real();
                u.x[2 * i + 1] = Z0.z[i].imag();
            }
            double T0 = T_seg_ref;
            if (cfg.T_seg_range.second > 0.0) {
                std::uniform_real_distribution<double> ur(cfg.T_seg_range.first,
                                                          cfg.T_seg_range.second);
                T0 = ur(rng);
            }
            u.x[2 * n] = T0;
            u.x[2 * n + 1] = std::remainder(omega_ngon * T0 + 2.0 * kPi / n, 2.0 * kPi);

            GNResult gn = gauss_newton(spec, cfg, u);
            sr.converged = gn.converged;
            sr.residual = gn.residual_norm;
            sr.failure = gn.failure;
            if (!gn.converged) return;

            OrbitResult orb;
            orb.spec = spec;
            orb.Z0 = gn.u.state();
            orb.T_seg = gn.u.T_seg();
            orb.theta = gn.u.theta();
            orb.residual = gn.residual_norm;
            const FirstIntegrals fi = first_integrals(spec, orb.Z0);
            orb.energy = fi.H;
            orb.I_level = fi.I;
            const LoopSample ambient = assemble_loop(spec, orb.Z0, orb.T_seg, orb.theta,
                                                     cfg.samples_per_segment, cfg.flow_tol);
            const LoopSample reduced = reduce_loop(ambient);
            orb.chore_defect = chore_defect(reduced);
            const ClassifyReport cls = classify_orbit(spec, orb, reduced);
            orb.fs_diameter = cls.fs_diameter;
            orb.classification = cls.classification;
            orb.inconsistent_fit = cls.inconsistent_fit;
            found[s] = orb;
        } catch (const Error& e) {
            sr.converged = false;
            sr.failure = e.what();
        }
    });

    for (const auto& orb : found) {
        if (!orb) continue;
        if (cfg.require_nontrivial &&
            orb->classification == Classification::TrivialRelativeEquilibrium)
            continue;
        report.results.push_back(*orb);
    }
    std::stable_sort(report.results.begin(), report.results.end(),
                     [](const OrbitResult& a, const OrbitResult& b) { return a.energy < b.energy; });
    return report;
}

SweepReport energy_sweep(const SystemSpec& spec, const std::vector<double>& levels,
                         const SearchConfig& cfg) {
    SweepReport sweep;
    for (double level : levels) {
        SearchConfig lc = cfg;
        lc.energy_target = level;
        SweepLevelReport lr;
        lr.level = level;
        const SearchReport rep = search(spec, lc);
        lr.results = rep.results;
        lr.found = !rep.results.empty();
        for (const auto& sr : rep.starts)
            if (sr.converged || !sr.failure.empty())
                lr.best_residual = std::min(lr.best_residual, sr.residual);
        for (const auto& orb : rep.results)
            ++lr.histogram[static_cast<int>(orb.classification)];
        sweep.levels.push_back(std::move(lr));
    }
    return sweep;
}

} // namespace vortex
