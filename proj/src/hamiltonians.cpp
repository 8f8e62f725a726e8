#include "vortex/hamiltonians.hpp"

#include <cmath>
#include <numbers>

namespace vortex {

namespace {
constexpr double kPi = std::numbers::pi;
}

SystemSpec SystemSpec::euler(int n, double gamma_all) {
    SystemSpec s;
    s.family = Family::Euler;
    s.n = n;
    s.gamma = RVec::Constant(n, gamma_all);
    s.validate();
    return s;
}

SystemSpec SystemSpec::bec(int n, double mu, double lambda, double gamma_all) {
    SystemSpec s;
    s.family = Family::BEC;
    s.n = n;
    s.gamma = RVec::Constant(n, gamma_all);
    s.mu = mu;
    s.lambda = lambda;
    s.validate();
    return s;
}

SystemSpec SystemSpec::nls_sites(int n, double gamma_all) {
    SystemSpec s;
    s.family = Family::NLSSites;
    s.n = n;
    s.gamma = RVec::Constant(n, gamma_all);
    s.validate();
    return s;
}

void SystemSpec::validate() const {
    if (n < 1)
        throw InvalidConfig("SystemSpec: n must be positive");
    if (gamma.size() != n)
        throw InvalidConfig("SystemSpec: gamma must have n entries");
    for (int i = 0; i < n; ++i)
        if (!(gamma[i] > 0.0))
            throw InvalidConfig("SystemSpec: all vorticities must be positive");
    if (family == Family::BEC && (!(mu > 0.0) || !(lambda > 0.0)))
        throw InvalidConfig("SystemSpec: BEC requires mu > 0 and lambda > 0");
    if (!(collision_eps > 0.0))
        throw InvalidConfig("SystemSpec: collision_eps must be positive");
}

bool SystemSpec::identical_gamma() const {
    for (int i = 1; i < n; ++i)
        if (gamma[i] != gamma[0]) return false;
    return true;
}

double VortexState::min_pair_distance() const {
    const int m = n();
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            best = std::min(best, std::abs(z[i] - z[j]));
    return best;
}

void check_admissible(const SystemSpec& spec, const VortexState& Z) {
    if (Z.n() != spec.n)
        throw DimensionMismatch("state has wrong particle count");
    if (spec.n > 1 && Z.min_pair_distance() <= spec.collision_eps)
        throw CollisionError("two vortices are within collision_eps");
    if (spec.family == Family::BEC) {
        for (int i = 0; i < spec.n; ++i)
            if (std::abs(Z.z[i]) >= 1.0)
                throw DomainError("BEC vortex outside the open unit disc");
    }
}

double energy(const SystemSpec& spec, const VortexState& Z) {
    check_admissible(spec, Z);
    const auto& g = spec.gamma;
    const auto& z = Z.z;
    const int n = spec.n;
    switch (spec.family) {
    case Family::Euler: {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                s += g[i] * g[j] * std::log(std::norm(z[i] - z[j]));
        return -s / (4.0 * kPi);
    }
    case Family::BEC: {
        double trap = 0.0, inter = 0.0;
        for (int i = 0; i < n; ++i)
            trap += g[i] * g[i] * std::log(1.0 / (1.0 - std::norm(z[i])));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                inter += g[i] * g[j] * std::log(std::norm(z[i] - z[j]));
        return -0.5 * (spec.mu * trap + spec.lambda * inter);
    }
    case Family::NLSSites: {
        double s = 0.0;
        for (int j = 0; j < n; ++j) {
            const int jn = (j + 1) % n;  // cyclic convention z_{n+1} = z_1
            s += 0.5 * g[j] * g[j] * std::norm(z[j]) * std::norm(z[j])
                 - g[j] * g[jn] * std::norm(z[jn] - z[j]);
        }
        return 0.5 * s;
    }
    }
    throw InvalidConfig("unknown family");
}

CVec grad_energy(const SystemSpec& spec, const VortexState& Z) {
    check_admissible(spec, Z);
    const auto& g = spec.gamma;
    const auto& z = Z.z;
    const int n = spec.n;
    CVec grad = CVec::Zero(n);
    switch (spec.family) {
    case Family::Euler: {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const Complex d = z[i] - z[j];
                const Complex t = g[i] * g[j] * d / std::norm(d);
                grad[i] -= t / (2.0 * kPi);
                grad[j] += t / (2.0 * kPi);
            }
        break;
    }
    case Family::BEC: {
        for (int i = 0; i < n; ++i)
            grad[i] += -spec.mu * g[i] * g[i] * z[i] / (1.0 - std::norm(z[i]));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const Complex d = z[i] - z[j];
                const Complex t = spec.lambda * g[i] * g[j] * d / std::norm(d);
                grad[i] -= t;
                grad[j] += t;
            }
        break;
    }
    case Family::NLSSites: {
        for (int j = 0; j < n; ++j) {
            const int jn = (j + 1) % n;
            grad[j] += g[j] * g[j] * std::norm(z[j]) * z[j];
            const Complex d = z[jn] - z[j];
            grad[jn] -= g[j] * g[jn] * d;
            grad[j] += g[j] * g[jn] * d;
        }
        break;
    }
    }
    return grad;
}

CVec vector_field(const SystemSpec& spec, const VortexState& Z) {
    CVec grad = grad_energy(spec, Z);
    CVec v(spec.n);
    const Complex mi(0.0, -1.0);  // J acts as multiplication by -i
    for (int i = 0; i < spec.n; ++i)
        v[i] = mi * grad[i] / spec.gamma[i];
    return v;
}

CVec vector_field_relaxed(const SystemSpec& spec, const VortexState& Z) {
    if (Z.n() != spec.n)
        throw DimensionMismatch("state has wrong particle count");
    if (spec.n > 1 && Z.min_pair_distance() <= spec.collision_eps)
        throw CollisionError("two vortices are within collision_eps");
    if (spec.family == Family::BEC) {
        for (int i = 0; i < spec.n; ++i)
            if (std::abs(1.0 - std::norm(Z.z[i])) == 0.0)
                throw DomainError("BEC vortex exactly on the unit circle");
    }
    const auto& g = spec.gamma;
    const auto& z = Z.z;
    const int n = spec.n;
    CVec grad = CVec::Zero(n);
    switch (spec.family) {
    case Family::Euler:
    case Family::NLSSites:
        grad = grad_energy(spec, Z);
        break;
    case Family::BEC: {
        for (int i = 0; i < n; ++i)
            grad[i] += -spec.mu * g[i] * g[i] * z[i] / (1.0 - std::norm(z[i]));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const Complex d = z[i] - z[j];
                const Complex t = spec.lambda * g[i] * g[j] * d / std::norm(d);
                grad[i] -= t;
                grad[j] += t;
            }
        break;
    }
    }
    CVec v(n);
    const Complex mi(0.0, -1.0);
    for (int i = 0; i < n; ++i) v[i] = mi * grad[i] / g[i];
    return v;
}

FirstIntegrals first_integrals(const SystemSpec& spec, const VortexState& Z) {
    FirstIntegrals out{};
    out.H = energy(spec, Z);
    out.I = 0.0;
    double px = 0.0, py = 0.0;
    for (int i = 0; i < spec.n; ++i) {
        out.I += spec.gamma[i] * std::norm(Z.z[i]);
        px += Z.z[i].real();
        py += Z.z[i].imag();
    }
    out.P = px / spec.n;
    out.Q = py / spec.n;
    out.pq_conserved = (spec.family == Family::Euler);
    return out;
}

CVec cyclic_shift(const CVec& z) {
    const int n = static_cast<int>(z.size());
    CVec out(n);
    out[0] = z[n - 1];
    for (int i = 1; i < n; ++i) out[i] = z[i - 1];
    return out;
}

CVec cyclic_shift_inverse(const CVec& z) {
    const int n = static_cast<int>(z.size());
    CVec out(n);
    for (int i = 0; i + 1 < n; ++i) out[i] = z[i + 1];
    out[n - 1] = z[0];
    return out;
}

VortexState regular_ngon(int n, double radius, double phase) {
    VortexState Z;
    Z.z.resize(n);
    for (int k = 1; k <= n; ++k)
        Z.z[k - 1] = radius * std::polar(1.0, 2.0 * kPi * k / n + phase);
    return Z;
}

} // namespace vortex
