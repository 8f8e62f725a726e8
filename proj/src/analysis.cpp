#include "vortex/analysis.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

namespace vortex {

namespace {
constexpr double kPi = std::numbers::pi;
}

void CircleConfig::validate() const {
    if (n() < 2) throw InvalidConfig("CircleConfig: need at least 2 points");
    if (!(rho > 0.0)) throw InvalidConfig("CircleConfig: rho must be positive");
    double sum = 0.0;
    for (int i = 0; i < n(); ++i) {
        if (!(theta[i] > 0.0)) throw InvalidConfig("CircleConfig: gaps must be positive");
        sum += theta[i];
    }
    if (std::abs(sum - 2.0 * kPi) > 1e-12)
        throw InvalidConfig("CircleConfig: gaps must sum to 2*pi");
}

CircleConfig CircleConfig::regular(int n, double rho) {
    CircleConfig c;
    c.theta = RVec::Constant(n, 2.0 * kPi / n);
    c.rho = rho;
    return c;
}

double chord_log_sum(const CircleConfig& c) {
    c.validate();
    const int n = c.n();
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = i + 1; j < n; ++j) {
            s += c.theta[j - 1];
            const double half_sin = std::sin(0.5 * s);
            if (half_sin <= 1e-15)
                throw DegenerateGap("chord_log_sum: coincident points on the circle");
            total += std::log(2.0 * c.rho * half_sin);
        }
    }
    return total;
}

RVec chord_log_sum_gradient(const CircleConfig& c) {
    c.validate();
    const int n = c.n();
    RVec grad = RVec::Zero(n);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = i + 1; j < n; ++j) {
            s += c.theta[j - 1];
            const double half_cot = 0.5 / std::tan(0.5 * s);
            // d l_ij / d theta_k is active for i < k+1 <= j, i.e. gaps i..j-1
            for (int k = i; k < j; ++k) grad[k] += half_cot;
        }
    }
    return grad;
}

MaximalityReport ngon_maximality_test(int n, double rho, int trials, std::uint64_t seed) {
    if (n < 2 || trials < 0) throw InvalidConfig("ngon_maximality_test: bad arguments");
    MaximalityReport rep;
    rep.n = n;
    rep.trials = trials;
    const CircleConfig ngon = CircleConfig::regular(n, rho);
    rep.ngon_value = chord_log_sum(ngon);

    // Constrained criticality: gradient projected onto sum(theta) = 2*pi.
    RVec g = chord_log_sum_gradient(ngon);
    g.array() -= g.mean();
    rep.projected_gradient_norm = g.norm();

    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> exp1(1.0);
    rep.max_sampled = -std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
        CircleConfig c;
        c.rho = rho;
        c.theta.resize(n);
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            c.theta[i] = exp1(rng) + 1e-9;
            sum += c.theta[i];
        }
        c.theta *= 2.0 * kPi / sum;
        rep.max_sampled = std::max(rep.max_sampled, chord_log_sum(c));
    }
    const bool no_exceed = (trials == 0) || (rep.max_sampled <= rep.ngon_value);
    rep.margin = (trials == 0) ? 0.0 : rep.ngon_value - rep.max_sampled;
    rep.pass = no_exceed && rep.projected_gradient_norm < 1e-10;
    return rep;
}

double polygon_trap_coefficient(double alpha_c, double beta_c, int n) {
    if (n < 1) throw InvalidConfig("polygon_trap_coefficient: n must be positive");
    const int M = 4 * n;
    std::vector<double> f(M);
    double mean = 0.0;
    for (int j = 0; j < M; ++j) {
        const double theta = 2.0 * kPi * j / M;
        f[j] = 1.0;
        for (int k = 0; k < n; ++k) f[j] *= alpha_c + beta_c * std::cos(theta + 2.0 * kPi * k / n);
        mean += f[j] / M;
    }
    // The constant mode projects to zero analytically; removing it first keeps
    // the beta_c = 0 slice exactly zero in floating point.
    double an = 0.0, bn = 0.0;
    for (int j = 0; j < M; ++j) {
        const double theta = 2.0 * kPi * j / M;
        an += (f[j] - mean) * std::cos(n * theta);
        bn += (f[j] - mean) * std::sin(n * theta);
    }
    an *= 2.0 / M;
    bn *= 2.0 / M;
    return std::hypot(an, bn);
}

ShubScanReport shub_separation_scan(const SystemSpec& spec, double I_level, int n_starts,
                                    std::uint64_t seed, double re_tol) {
    if (spec.family != Family::BEC)
        throw InvalidConfig("shub_separation_scan: BEC family required");
    ShubScanReport rep;
    rep.n_starts = n_starts;
    rep.hypothesis_ok = I_level < spec.gamma.minCoeff();
    rep.epsilon_hat = std::numeric_limits<double>::infinity();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int s = 0; s < n_starts; ++s) {
        VortexState guess;
        guess.z.resize(spec.n);
        double I = 0.0;
        for (int i = 0; i < spec.n; ++i) {
            Complex z;
            do {
                z = Complex(unif(rng), unif(rng));
            } while (std::abs(z) > 0.95 || std::abs(z) < 0.05);
            guess.z[i] = z;
            I += spec.gamma[i] * std::norm(z);
        }
        guess.z *= std::sqrt(I_level / I);
        try {
            const RelativeEquilibrium re = find_relative_equilibrium(spec, guess, I_level, re_tol);
            const double d = re.Z.min_pair_distance();
            rep.separations.push_back(d * d);
            rep.epsilon_hat = std::min(rep.epsilon_hat, d * d);
            rep.max_residual = std::max(rep.max_residual, re.residual);
            ++rep.converged;
        } catch (const Error&) {
            // per-start failure, logged by omission
        }
    }
    if (rep.converged == 0) rep.epsilon_hat = 0.0;
    rep.pass = rep.converged > 0 && rep.epsilon_hat > 0.0 && rep.max_residual < re_tol;
    return rep;
}

namespace {

// Restricted energy on M_rho parametrized by the n phase angles.
struct RestrictedEnergy {
    const SystemSpec& spec;
    double radius;

    VortexState state(const RVec& phi) const {
        VortexState Z;
        Z.z.resize(spec.n);
        for (int i = 0; i < spec.n; ++i) Z.z[i] = std::polar(radius, phi[i]);
        return Z;
    }
    double value(const RVec& phi) const { return energy(spec, state(phi)); }
    RVec gradient(const RVec& phi) const {
        const VortexState Z = state(phi);
        const CVec g = grad_energy(spec, Z);
        RVec out(spec.n);
        for (int i = 0; i < spec.n; ++i)
            out[i] = std::real(std::conj(g[i]) * Complex(0.0, 1.0) * Z.z[i]);
        return out;
    }
};

double wrap_angle(double a) {
    while (a > kPi) a -= 2.0 * kPi;
    while (a < -kPi) a += 2.0 * kPi;
    return a;
}

RVec wrapped_difference(const RVec& a, const RVec& b) {
    RVec d(a.size());
    for (int i = 0; i < a.size(); ++i) d[i] = wrap_angle(a[i] - b[i]);
    return d;
}

} // namespace

ComponentProbeReport invariant_component_probe(const SystemSpec& spec, double c, double I_level,
                                               int samples, std::uint64_t seed) {
    if (samples < 1) throw InvalidConfig("invariant_component_probe: samples must be positive");
    if (!spec.identical_gamma())
        throw InvalidConfig("invariant_component_probe: identical vorticities required");
    const int n = spec.n;
    const double rho = I_level / (n * spec.gamma[0]);
    RestrictedEnergy H{spec, std::sqrt(rho)};

    RVec ngon(n);
    for (int k = 1; k <= n; ++k) ngon[k - 1] = 2.0 * kPi * k / n;
    const double cB = H.value(ngon);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto random_direction = [&]() {
        RVec d(n);
        for (int i = 0; i < n; ++i) d[i] = gauss(rng);
        d.array() -= d.mean();  // drop the common-rotation component
        if (d.norm() > 0) d /= d.norm();
        return d;
    };

    // Find a level point near the n-gon along a probe direction, by bisection.
    auto find_level_point = [&](const RVec& dir) -> std::optional<RVec> {
        double t_hi = 1e-3;
        const double t_max = 1.5;
        while (t_hi < t_max) {
            const double v = H.value(ngon + t_hi * dir);
            if ((v - c) * (cB - c) < 0.0) break;  // crossed the level
            t_hi *= 2.0;
        }
        if (t_hi >= t_max) return std::nullopt;
        double lo = 0.0, hi = t_hi;
        for (int i = 0; i < 80; ++i) {
            const double mid = 0.5 * (lo + hi);
            ((H.value(ngon + mid * dir) - c) * (cB - c) > 0.0 ? lo : hi) = mid;
        }
        return ngon + 0.5 * (lo + hi) * dir;
    };

    ComponentProbeReport rep;
    int feasibility_tries = 0;
    std::vector<RVec> points;
    while (static_cast<int>(points.size()) < samples && feasibility_tries < samples + 50) {
        ++feasibility_tries;
        if (auto p = find_level_point(random_direction())) points.push_back(*p);
    }
    if (points.empty())
        throw LevelEmpty("invariant_component_probe: level not attainable near the n-gon");

    rep.samples = static_cast<int>(points.size());
    for (const RVec& start : points) {
        // sigma~ permutes the particles: angle i takes the value of angle i-1.
        RVec target(n);
        target[0] = start[n - 1];
        for (int i = 1; i < n; ++i) target[i] = start[i - 1];
        rep.max_sigma_energy_gap =
            std::max(rep.max_sigma_energy_gap, std::abs(H.value(target) - H.value(start)));

        // Gradient-orthogonal stepping on the level set toward the target.
        RVec cur = start;
        const double step = 1e-3;
        bool ok = false;
        for (int it = 0; it < 100000; ++it) {
            RVec diff = wrapped_difference(target, cur);
            if (diff.norm() < 1e-2) {
                ok = true;
                break;
            }
            RVec grad = H.gradient(cur);
            const double g2 = grad.squaredNorm();
            if (g2 > 0) diff -= (diff.dot(grad) / g2) * grad;
            if (diff.norm() == 0.0) break;
            cur += step * diff / diff.norm();
            // Newton correction back onto the level set.
            for (int corr = 0; corr < 3; ++corr) {
                grad = H.gradient(cur);
                const double err = H.value(cur) - c;
                if (std::abs(err) < 1e-13) break;
                cur -= (err / grad.squaredNorm()) * grad;
            }
        }
        rep.max_level_error = std::max(rep.max_level_error, std::abs(H.value(cur) - c));
        if (ok) ++rep.connected;
    }
    return rep;
}

} // namespace vortex
