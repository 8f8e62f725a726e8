// vortex-chorus: CLI driver for the n-vortex choreography library.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>

#include "vortex/analysis.hpp"
#include "vortex/io.hpp"
#include "vortex/search.hpp"
#include "vortex/spheres.hpp"

namespace {

using nlohmann::json;
using namespace vortex;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitUsage = 64;

struct SystemFlags {
    std::string family = "euler";
    int n = 3;
    double gamma = 1.0;
    std::vector<double> gammas;
    double mu = 1.0;
    double lambda = 1.0;
    double collision_eps = 1e-12;

    void attach(CLI::App* cmd) {
        cmd->add_option("--family", family, "euler | bec | nls-sites")
            ->check(CLI::IsMember({"euler", "bec", "nls-sites"}));
        cmd->add_option("--n", n, "particle count")->check(CLI::PositiveNumber);
        cmd->add_option("--gamma", gamma, "common vorticity");
        cmd->add_option("--gammas", gammas, "per-vortex vorticities (overrides --gamma)");
        cmd->add_option("--mu", mu, "BEC trap precession");
        cmd->add_option("--lambda", lambda, "BEC interaction strength");
        cmd->add_option("--collision-eps", collision_eps, "collision guard distance");
    }

    SystemSpec build() const {
        SystemSpec spec;
        if (family == "euler") spec.family = Family::Euler;
        else if (family == "bec") spec.family = Family::BEC;
        else spec.family = Family::NLSSites;
        spec.n = n;
        if (!gammas.empty()) {
            if (static_cast<int>(gammas.size()) != n)
                throw InvalidConfig("--gammas must list n values");
            spec.gamma = Eigen::Map<const RVec>(gammas.data(), n);
        } else {
            spec.gamma = RVec::Constant(n, gamma);
        }
        if (spec.family == Family::BEC) {
            spec.mu = mu;
            spec.lambda = lambda;
        }
        spec.collision_eps = collision_eps;
        spec.validate();
        return spec;
    }
};

VortexState make_initial(const SystemSpec& spec, const std::string& init, double radius,
                         std::uint64_t seed) {
    if (init == "thomson") return regular_ngon(spec.n, radius);
    if (init == "random") {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> unif(-1.0, 1.0);
        const double box = spec.family == Family::BEC ? 0.6 : radius;
        for (int attempt = 0; attempt < 1000; ++attempt) {
            VortexState Z;
            Z.z.resize(spec.n);
            for (int i = 0; i < spec.n; ++i) Z.z[i] = box * Complex(unif(rng), unif(rng));
            try {
                check_admissible(spec, Z);
                if (Z.min_pair_distance() > 0.05 * box) return Z;
            } catch (const Error&) {
            }
        }
        throw NoConvergence("could not draw an admissible random state");
    }
    // init = path to a JSON array [[x1,y1],...]
    std::ifstream in(init);
    if (!in) throw IoError("cannot read initial state file: " + init);
    json arr = json::parse(in);
    VortexState Z;
    Z.z.resize(spec.n);
    if (static_cast<int>(arr.size()) != spec.n)
        throw InvalidConfig("initial state file must list n points");
    for (int i = 0; i < spec.n; ++i) Z.z[i] = Complex(arr[i][0].get<double>(), arr[i][1].get<double>());
    return Z;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << text;
}

// Optional JSON config file: keys are long option names; command-line flags
// take precedence over file entries.
std::vector<std::string> merge_config_args(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string config_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) config_path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0) config_path = args[i].substr(9);
    }
    if (config_path.empty()) return args;
    std::ifstream in(config_path);
    if (!in) throw IoError("cannot read config file: " + config_path);
    const json cfg = json::parse(in);
    for (auto it = cfg.begin(); it != cfg.end(); ++it) {
        const std::string flag = "--" + it.key();
        bool present = false;
        for (const auto& a : args)
            if (a == flag || a.rfind(flag + "=", 0) == 0) present = true;
        if (present) continue;
        if (it.value().is_boolean()) {
            if (it.value().get<bool>()) args.push_back(flag);
        } else if (it.value().is_string()) {
            args.push_back(flag + "=" + it.value().get<std::string>());
        } else {
            args.push_back(flag + "=" + it.value().dump());
        }
    }
    return args;
}

int run(int argc, char** argv) {
    CLI::App app{"n-vortex dynamics, projective reduction and choreography search"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (flags override)");

    // simulate ----------------------------------------------------------
    auto* sim = app.add_subcommand("simulate", "integrate the flow and export the trajectory");
    SystemFlags sim_sys;
    sim_sys.attach(sim);
    std::string sim_init = "thomson", sim_out = "-", sim_format = "csv";
    double sim_T = 10.0, sim_tol = 1e-10, sim_radius = 1.0;
    int sim_samples = 200;
    std::uint64_t sim_seed = 0;
    sim->add_option("--init", sim_init, "thomson | random | <state.json>");
    sim->add_option("--radius", sim_radius, "n-gon radius for --init thomson");
    sim->add_option("--seed", sim_seed, "RNG seed for --init random");
    sim->add_option("--T", sim_T, "integration time");
    sim->add_option("--tol", sim_tol, "integrator tolerance");
    sim->add_option("--samples", sim_samples, "number of output samples");
    sim->add_option("--out", sim_out, "output path ('-' for stdout)");
    sim->add_option("--format", sim_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    // reduce ------------------------------------------------------------
    auto* red = app.add_subcommand("reduce", "integrate, project to CP^{n-1} and export");
    SystemFlags red_sys;
    red_sys.attach(red);
    std::string red_init = "thomson", red_out = "-";
    double red_T = 10.0, red_tol = 1e-10, red_radius = 1.0;
    int red_samples = 200;
    std::uint64_t red_seed = 0;
    red->add_option("--init", red_init, "thomson | random | <state.json>");
    red->add_option("--radius", red_radius, "n-gon radius for --init thomson");
    red->add_option("--seed", red_seed, "RNG seed for --init random");
    red->add_option("--T", red_T, "integration time");
    red->add_option("--tol", red_tol, "integrator tolerance");
    red->add_option("--samples", red_samples, "number of output samples");
    red->add_option("--out", red_out, "output path ('-' for stdout)");

    // search ------------------------------------------------------------
    auto* sea = app.add_subcommand("search", "multi-start shooting search for relative choreographies");
    SystemFlags sea_sys;
    sea_sys.attach(sea);
    SearchConfig sea_cfg;
    std::string sea_out = "-";
    double sea_energy = std::numeric_limits<double>::quiet_NaN();
    sea->add_option("--I", sea_cfg.I_level, "moment-of-inertia level");
    sea->add_option("--energy", sea_energy, "optional energy target");
    sea->add_option("--starts", sea_cfg.n_starts, "number of starts");
    sea->add_option("--seed", sea_cfg.seed, "RNG seed");
    sea->add_option("--newton-tol", sea_cfg.newton_tol, "shooting residual tolerance");
    sea->add_option("--max-iter", sea_cfg.max_iter, "Gauss-Newton iteration cap");
    sea->add_option("--perturbation", sea_cfg.perturbation_scale, "seed perturbation scale");
    sea->add_option("--T-seg-min", sea_cfg.T_seg_range.first, "segment period range, low");
    sea->add_option("--T-seg-max", sea_cfg.T_seg_range.second, "segment period range, high");
    sea->add_flag("--require-nontrivial", sea_cfg.require_nontrivial,
                  "drop trivial relative equilibria from the results");
    sea->add_flag("--centred", sea_cfg.centred, "pin P = Q = 0 (Euler)");
    sea->add_flag("--doubled-seed", sea_cfg.doubled_seed, "seed from the doubled (n/2)-gon");
    sea->add_option("--out", sea_out, "output path ('-' for stdout)");

    // sweep ---------------------------------------------------------------
    auto* swp = app.add_subcommand("sweep", "run the search at a list of energy levels");
    SystemFlags swp_sys;
    swp_sys.attach(swp);
    SearchConfig swp_cfg;
    std::vector<double> swp_levels;
    std::string swp_out = "-";
    swp->add_option("--levels", swp_levels, "energy levels")->required();
    swp->add_option("--I", swp_cfg.I_level, "moment-of-inertia level");
    swp->add_option("--starts", swp_cfg.n_starts, "number of starts");
    swp->add_option("--seed", swp_cfg.seed, "RNG seed");
    swp->add_option("--newton-tol", swp_cfg.newton_tol, "shooting residual tolerance");
    swp->add_option("--perturbation", swp_cfg.perturbation_scale, "seed perturbation scale");
    swp->add_flag("--centred", swp_cfg.centred, "pin P = Q = 0 (Euler)");
    swp->add_option("--out", swp_out, "output path ('-' for stdout)");

    // sphere --------------------------------------------------------------
    auto* sph = app.add_subcommand("sphere", "explicit choreographic holomorphic spheres");
    std::string sph_target = "cpn1";
    int sph_n = 3, sph_samples = 100;
    double sph_zeta = 1.0, sph_quad_tol = 1e-8;
    bool sph_check = false, sph_area = false;
    std::uint64_t sph_seed = 0;
    sph->add_option("--target", sph_target, "cpn1 | cpn2")->check(CLI::IsMember({"cpn1", "cpn2"}));
    sph->add_option("--n", sph_n, "particle count")->check(CLI::PositiveNumber);
    sph->add_option("--zeta", sph_zeta, "Moebius scale (real magnitude)");
    sph->add_flag("--check-equivariance", sph_check, "report the equivariance defect");
    sph->add_option("--samples", sph_samples, "random sample count for the defect");
    sph->add_option("--seed", sph_seed, "RNG seed for the samples");
    sph->add_flag("--area", sph_area, "report disc and full Fubini-Study areas");
    sph->add_option("--quad-tol", sph_quad_tol, "quadrature tolerance");

    // analyze ---------------------------------------------------------------
    auto* ana = app.add_subcommand("analyze", "chord-log, trap-coefficient and equilibrium scans");
    SystemFlags ana_sys;
    ana_sys.attach(ana);
    std::string ana_op;
    int ana_trials = 10000, ana_starts = 200, ana_probe_samples = 10;
    double ana_rho = 1.0, ana_alpha = 0.7, ana_beta = 0.4, ana_I = 0.3, ana_c = 0.0;
    std::uint64_t ana_seed = 0;
    ana->add_option("--op", ana_op,
                    "chord-log | ngon-max | trap-coeff | shub-scan | component-probe")
        ->required()
        ->check(CLI::IsMember({"chord-log", "ngon-max", "trap-coeff", "shub-scan",
                               "component-probe"}));
    ana->add_option("--rho", ana_rho, "circle radius / ring level");
    ana->add_option("--trials", ana_trials, "random trials for ngon-max");
    ana->add_option("--alpha", ana_alpha, "trap-coeff alpha");
    ana->add_option("--beta", ana_beta, "trap-coeff beta");
    ana->add_option("--I", ana_I, "moment-of-inertia level");
    ana->add_option("--c", ana_c, "energy level for component-probe");
    ana->add_option("--starts", ana_starts, "starts for shub-scan");
    ana->add_option("--probe-samples", ana_probe_samples, "samples for component-probe");
    ana->add_option("--seed", ana_seed, "RNG seed");

    try {
        std::vector<std::string> args = merge_config_args(argc, argv);
        std::reverse(args.begin(), args.end());  // CLI11 vector parse wants reversed args
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }

    try {
        if (*sim) {
            const SystemSpec spec = sim_sys.build();
            const VortexState Z0 = make_initial(spec, sim_init, sim_radius, sim_seed);
            const Trajectory traj = flow(spec, Z0, sim_T, sim_tol, sim_samples);
            if (sim_out == "-") {
                export_trajectory(traj, "/dev/stdout", sim_format == "csv" ? OutputFormat::Csv
                                                                           : OutputFormat::Json);
            } else {
                export_trajectory(traj, sim_out, sim_format == "csv" ? OutputFormat::Csv
                                                                     : OutputFormat::Json);
            }
        } else if (*red) {
            const SystemSpec spec = red_sys.build();
            const VortexState Z0 = make_initial(spec, red_init, red_radius, red_seed);
            const Trajectory traj = flow(spec, Z0, red_T, red_tol, red_samples);
            std::string text = "t";
            for (int i = 1; i <= spec.n; ++i)
                text += ",re" + std::to_string(i) + ",im" + std::to_string(i);
            text += ",fs_from_start\n";
            const ProjectivePoint first = hopf_project(traj.states.front());
            for (std::size_t row = 0; row < traj.times.size(); ++row) {
                const ProjectivePoint p = hopf_project(traj.states[row]);
                text += format_double(traj.times[row]);
                for (int i = 0; i < spec.n; ++i)
                    text += "," + format_double(p.v[i].real()) + "," + format_double(p.v[i].imag());
                text += "," + format_double(fs_distance(first, p)) + "\n";
            }
            write_text(red_out, text);
        } else if (*sea) {
            const SystemSpec spec = sea_sys.build();
            if (!std::isnan(sea_energy)) sea_cfg.energy_target = sea_energy;
            const SearchReport rep = search(spec, sea_cfg);
            write_text(sea_out, search_report_to_json(rep).dump(2) + "\n");
        } else if (*swp) {
            const SystemSpec spec = swp_sys.build();
            const SweepReport rep = energy_sweep(spec, swp_levels, swp_cfg);
            write_text(swp_out, sweep_report_to_json(rep).dump(2) + "\n");
        } else if (*sph) {
            const SphereTarget target =
                sph_target == "cpn1" ? SphereTarget::CPn1 : SphereTarget::CPn2;
            const SphereMap map = SphereMap::make(sph_n, target, Complex(sph_zeta, 0.0));
            if (sph_check) {
                std::mt19937_64 rng(sph_seed);
                std::normal_distribution<double> gauss(0.0, 1.0);
                std::vector<ExtComplex> pts;
                pts.push_back(ExtComplex::finite({0.0, 0.0}));
                pts.push_back(ExtComplex::infinity());
                for (int i = 0; i < sph_samples; ++i)
                    pts.push_back(ExtComplex::finite(Complex(gauss(rng), gauss(rng))));
                std::cout << "max_defect=" << format_double(equivariance_defect(map, pts)) << "\n";
            }
            if (sph_area) {
                std::cout << "disc_area=" << format_double(fs_area(map, AreaRegion::UnitDisc, sph_quad_tol))
                          << "\n";
                std::cout << "full_area=" << format_double(fs_area(map, AreaRegion::Full, sph_quad_tol))
                          << "\n";
            }
            if (!sph_check && !sph_area)
                std::cout << "endpoint_distance=" << format_double(fs_distance(map.A, map.B)) << "\n";
        } else if (*ana) {
            if (ana_op == "chord-log") {
                const CircleConfig c = CircleConfig::regular(ana_sys.n, ana_rho);
                std::cout << "chord_log_sum=" << format_double(chord_log_sum(c)) << "\n";
            } else if (ana_op == "ngon-max") {
                const MaximalityReport rep =
                    ngon_maximality_test(ana_sys.n, ana_rho, ana_trials, ana_seed);
                std::cout << "ngon_value=" << format_double(rep.ngon_value)
                          << " max_sampled=" << format_double(rep.max_sampled)
                          << " margin=" << format_double(rep.margin)
                          << " grad_norm=" << format_double(rep.projected_gradient_norm)
                          << " pass=" << (rep.pass ? "true" : "false") << "\n";
                if (!rep.pass) return kExitNumerical;
            } else if (ana_op == "trap-coeff") {
                std::cout << "coefficient="
                          << format_double(polygon_trap_coefficient(ana_alpha, ana_beta, ana_sys.n))
                          << "\n";
            } else if (ana_op == "shub-scan") {
                const SystemSpec spec = ana_sys.build();
                const ShubScanReport rep = shub_separation_scan(spec, ana_I, ana_starts, ana_seed);
                if (!rep.hypothesis_ok)
                    std::cout << "warning: I_level >= min Gamma_i (separation bound hypothesis violated)\n";
                std::cout << "converged=" << rep.converged << "/" << rep.n_starts
                          << " epsilon_hat=" << format_double(rep.epsilon_hat)
                          << " max_residual=" << format_double(rep.max_residual)
                          << " pass=" << (rep.pass ? "true" : "false") << "\n";
                if (!rep.pass) return kExitNumerical;
            } else if (ana_op == "component-probe") {
                const SystemSpec spec = ana_sys.build();
                const ComponentProbeReport rep =
                    invariant_component_probe(spec, ana_c, ana_I, ana_probe_samples, ana_seed);
                std::cout << "samples=" << rep.samples << " connected=" << rep.connected
                          << " success_rate=" << format_double(rep.success_rate())
                          << " max_level_error=" << format_double(rep.max_level_error)
                          << " sigma_energy_gap=" << format_double(rep.max_sigma_energy_gap)
                          << "\n";
            }
        }
    } catch (const NoConvergence& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const QuadratureFailure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const StepFailure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const CollisionApproach& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
