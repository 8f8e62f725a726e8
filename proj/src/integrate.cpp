#include "vortex/integrate.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>

namespace vortex {

namespace odeint = boost::numeric::odeint;
using State = std::vector<double>;

namespace {

VortexState unpack(const State& x) {
    VortexState Z;
    const int n = static_cast<int>(x.size()) / 2;
    Z.z.resize(n);
    for (int i = 0; i < n; ++i) Z.z[i] = Complex(x[2 * i], x[2 * i + 1]);
    return Z;
}

State pack(const VortexState& Z) {
    State x(2 * Z.n());
    for (int i = 0; i < Z.n(); ++i) {
        x[2 * i] = Z.z[i].real();
        x[2 * i + 1] = Z.z[i].imag();
    }
    return x;
}

struct Rhs {
    const SystemSpec& spec;
    void operator()(const State& x, State& dxdt, double /*t*/) const {
        VortexState Z = unpack(x);
        CVec v;
        try {
            v = vector_field_relaxed(spec, Z);
        } catch (const CollisionError&) {
            throw CollisionApproach("pairwise distance fell below collision_eps during integration");
        }
        dxdt.resize(x.size());
        for (int i = 0; i < spec.n; ++i) {
            dxdt[2 * i] = v[i].real();
            dxdt[2 * i + 1] = v[i].imag();
        }
    }
};

template <typename Observer>
void integrate_at(const SystemSpec& spec, const VortexState& Z0, const std::vector<double>& times,
                  double tol, Observer obs) {
    auto stepper = odeint::make_controlled(tol, tol, odeint::runge_kutta_fehlberg78<State>());
    State x = pack(Z0);
    double dt = times.size() > 1 ? (times[1] - times[0]) : 1e-3;
    if (dt == 0.0) dt = 1e-3;
    try {
        odeint::integrate_times(stepper, Rhs{spec}, x, times.begin(), times.end(), dt, obs);
    } catch (const std::overflow_error&) {
        throw StepFailure("adaptive step size underflow");
    }
}

} // namespace

Trajectory::Drift Trajectory::integral_drift() const {
    const auto& f0 = integrals.front();
    auto rel = [](double a, double b) {
        const double scale = std::max(1.0, std::abs(b));
        return std::abs(a - b) / scale;
    };
    Drift d{0, 0, 0, 0};
    for (const auto& f : integrals) {
        d.H = std::max(d.H, rel(f.H, f0.H));
        d.I = std::max(d.I, rel(f.I, f0.I));
        d.P = std::max(d.P, rel(f.P, f0.P));
        d.Q = std::max(d.Q, rel(f.Q, f0.Q));
    }
    return d;
}

Trajectory flow(const SystemSpec& spec, const VortexState& Z0, double T, double tol, int n_samples) {
    check_admissible(spec, Z0);
    if (!(tol > 0.0)) throw InvalidConfig("flow: tol must be positive");
    Trajectory traj;
    traj.spec = spec;
    if (T == 0.0 || n_samples < 1) {
        traj.times.push_back(0.0);
        traj.states.push_back(Z0);
        traj.integrals.push_back(first_integrals(spec, Z0));
        return traj;
    }
    std::vector<double> times(n_samples + 1);
    for (int i = 0; i <= n_samples; ++i) times[i] = T * i / n_samples;
    integrate_at(spec, Z0, times, tol, [&](const State& x, double t) {
        traj.times.push_back(t);
        traj.states.push_back(unpack(x));
        traj.integrals.push_back(first_integrals(spec, traj.states.back()));
    });
    return traj;
}

VortexState flow_final(const SystemSpec& spec, const VortexState& Z0, double T, double tol) {
    check_admissible(spec, Z0);
    if (T == 0.0) return Z0;
    std::vector<double> times{0.0, T};
    VortexState out = Z0;
    integrate_at(spec, Z0, times, tol, [&](const State& x, double t) {
        if (t == T) out = unpack(x);
    });
    return out;
}

double relative_equilibrium_residual(const SystemSpec& spec, const VortexState& Z,
                                     double omega, Complex center) {
    const CVec v = vector_field(spec, Z);
    const Complex rot(0.0, 1.0);  // zdot = i*omega*(z - c): omega is the ccw phase rate
    double s = 0.0;
    for (int i = 0; i < spec.n; ++i)
        s += std::norm(v[i] - omega * rot * (Z.z[i] - center));
    return std::sqrt(s);
}

double fit_omega(const SystemSpec& spec, const VortexState& Z, Complex center) {
    const CVec v = vector_field(spec, Z);
    const Complex rot(0.0, 1.0);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < spec.n; ++i) {
        const Complex w = rot * (Z.z[i] - center);
        num += std::real(std::conj(w) * v[i]);
        den += std::norm(w);
    }
    if (den == 0.0) throw DegenerateInput("fit_omega: configuration collapsed to the center");
    return num / den;
}

namespace {

// Residual for the relative-equilibrium solve: field mismatch (2n reals),
// moment of inertia constraint, and the phase pin Im z_1 = 0.
RVec re_residual_vec(const SystemSpec& spec, const RVec& x, double fix_I) {
    const int n = spec.n;
    VortexState Z;
    Z.z.resize(n);
    for (int i = 0; i < n; ++i) Z.z[i] = Complex(x[2 * i], x[2 * i + 1]);
    const double omega = x[2 * n];
    const CVec v = vector_field(spec, Z);
    const Complex rot(0.0, 1.0);
    RVec r(2 * n + 2);
    for (int i = 0; i < n; ++i) {
        const Complex d = v[i] - omega * rot * Z.z[i];
        r[2 * i] = d.real();
        r[2 * i + 1] = d.imag();
    }
    r[2 * n] = first_integrals(spec, Z).I - fix_I;
    r[2 * n + 1] = Z.z[0].imag();
    return r;
}

} // namespace

RelativeEquilibrium find_relative_equilibrium(const SystemSpec& spec, const VortexState& guess,
                                              double fix_I, double re_tol, int max_iter) {
    check_admissible(spec, guess);
    if (!(fix_I > 0.0)) throw InvalidConfig("find_relative_equilibrium: fix_I must be positive");
    const int n = spec.n;

    // Rotate the guess so that Im z_1 = 0, Re z_1 > 0 (removes the SO(2) kernel).
    VortexState Z = guess;
    if (std::abs(Z.z[0]) > 0.0) {
        const Complex phase = std::conj(Z.z[0]) / std::abs(Z.z[0]);
        Z.z *= phase;
    }

    RVec x(2 * n + 1);
    for (int i = 0; i < n; ++i) {
        x[2 * i] = Z.z[i].real();
        x[2 * i + 1] = Z.z[i].imag();
    }
    x[2 * n] = fit_omega(spec, Z);

    try {
        RVec r = re_residual_vec(spec, x, fix_I);
        for (int iter = 0; iter < max_iter; ++iter) {
            if (r.norm() < re_tol) break;
            // Numerical Jacobian, forward differences.
            Eigen::MatrixXd J(r.size(), x.size());
            for (int k = 0; k < x.size(); ++k) {
                const double h = 1e-7 * std::max(1.0, std::abs(x[k]));
                RVec xp = x;
                xp[k] += h;
                J.col(k) = (re_residual_vec(spec, xp, fix_I) - r) / h;
            }
            RVec step = J.colPivHouseholderQr().solve(-r);
            double alpha = 1.0;
            bool improved = false;
            for (int ls = 0; ls < 30; ++ls) {
                RVec xt = x + alpha * step;
                try {
                    RVec rt = re_residual_vec(spec, xt, fix_I);
                    if (rt.norm() < r.norm()) {
                        x = xt;
                        r = rt;
                        improved = true;
                        break;
                    }
                } catch (const Error&) {
                    // step left the admissible set; shrink
                }
                alpha *= 0.5;
            }
            if (!improved)
                throw NoConvergence("find_relative_equilibrium: line search stalled");
        }
        if (r.norm() >= re_tol)
            throw NoConvergence("find_relative_equilibrium: residual above re_tol after max_iter");
    } catch (const CollisionError&) {
        throw CollisionApproach("find_relative_equilibrium: iterate approached a collision");
    }

    RelativeEquilibrium out;
    out.Z.z.resize(n);
    for (int i = 0; i < n; ++i) out.Z.z[i] = Complex(x[2 * i], x[2 * i + 1]);
    out.omega = x[2 * n];
    out.center = Complex(0.0, 0.0);
    out.residual = relative_equilibrium_residual(spec, out.Z, out.omega);
    if (out.Z.z[0].real() < 0.0) {
        out.Z.z *= -1.0;  // keep the pin convention Re z_1 > 0
    }
    return out;
}

} // namespace vortex
