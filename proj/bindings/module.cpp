#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vortex/analysis.hpp"
#include "vortex/search.hpp"
#include "vortex/spheres.hpp"

namespace py = pybind11;
using namespace vortex;

namespace {

VortexState state_from(const CVec& z) {
    VortexState Z;
    Z.z = z;
    return Z;
}

} // namespace

PYBIND11_MODULE(_vortex_chorus, m) {
    m.doc() = "n-vortex dynamics, projective reduction and choreography search";

    py::register_exception<Error>(m, "VortexError");

    py::enum_<Family>(m, "Family")
        .value("Euler", Family::Euler)
        .value("BEC", Family::BEC)
        .value("NLSSites", Family::NLSSites);

    py::class_<SystemSpec>(m, "SystemSpec")
        .def_static("euler", &SystemSpec::euler, py::arg("n"), py::arg("gamma_all") = 1.0)
        .def_static("bec", &SystemSpec::bec, py::arg("n"), py::arg("mu"), py::arg("lambda_"),
                    py::arg("gamma_all") = 1.0)
        .def_static("nls_sites", &SystemSpec::nls_sites, py::arg("n"),
                    py::arg("gamma_all") = 1.0)
        .def_readwrite("family", &SystemSpec::family)
        .def_readwrite("n", &SystemSpec::n)
        .def_readwrite("gamma", &SystemSpec::gamma)
        .def_readwrite("mu", &SystemSpec::mu)
        .def_readwrite("lambda_", &SystemSpec::lambda)
        .def_readwrite("collision_eps", &SystemSpec::collision_eps)
        .def("validate", &SystemSpec::validate);

    m.def("regular_ngon",
          [](int n, double radius, double phase) { return regular_ngon(n, radius, phase).z; },
          py::arg("n"), py::arg("radius"), py::arg("phase") = 0.0);
    m.def("energy", [](const SystemSpec& s, const CVec& z) { return energy(s, state_from(z)); });
    m.def("grad_energy",
          [](const SystemSpec& s, const CVec& z) { return grad_energy(s, state_from(z)); });
    m.def("vector_field",
          [](const SystemSpec& s, const CVec& z) { return vector_field(s, state_from(z)); });
    m.def("first_integrals", [](const SystemSpec& s, const CVec& z) {
        const FirstIntegrals fi = first_integrals(s, state_from(z));
        return py::make_tuple(fi.H, fi.I, fi.P, fi.Q);
    });
    m.def("cyclic_shift", &cyclic_shift);

    m.def(
        "flow",
        [](const SystemSpec& s, const CVec& z0, double T, double tol, int n_samples) {
            const Trajectory traj = flow(s, state_from(z0), T, tol, n_samples);
            std::vector<CVec> states;
            states.reserve(traj.states.size());
            for (const auto& st : traj.states) states.push_back(st.z);
            return py::make_tuple(traj.times, states);
        },
        py::arg("spec"), py::arg("z0"), py::arg("T"), py::arg("tol") = 1e-10,
        py::arg("n_samples") = 200);
    m.def(
        "flow_final",
        [](const SystemSpec& s, const CVec& z0, double T, double tol) {
            return flow_final(s, state_from(z0), T, tol).z;
        },
        py::arg("spec"), py::arg("z0"), py::arg("T"), py::arg("tol") = 1e-10);
    m.def(
        "find_relative_equilibrium",
        [](const SystemSpec& s, const CVec& guess, double fix_I, double re_tol, int max_iter) {
            const RelativeEquilibrium re =
                find_relative_equilibrium(s, state_from(guess), fix_I, re_tol, max_iter);
            return py::make_tuple(re.Z.z, re.omega, re.residual);
        },
        py::arg("spec"), py::arg("guess"), py::arg("fix_I"), py::arg("re_tol") = 1e-10,
        py::arg("max_iter") = 100);

    m.def("hopf_project", [](const CVec& z) { return hopf_project(z).v; });
    m.def("fs_distance", [](const CVec& a, const CVec& b) {
        return fs_distance(hopf_project(a), hopf_project(b));
    });
    m.def("lim_frame", [](int n) { return LimFrame(n).U; });
    m.def("sigma1", [](const CVec& v) { return sigma1(hopf_project(v)).v; });
    m.def("sigma2", [](const CVec& v) { return sigma2(hopf_project(v)).v; });
    m.def("sigma2_diagonal", [](const CVec& v) { return sigma2_diagonal(hopf_project(v)).v; });

    py::enum_<SphereTarget>(m, "SphereTarget")
        .value("CPn1", SphereTarget::CPn1)
        .value("CPn2", SphereTarget::CPn2);
    py::enum_<AreaRegion>(m, "AreaRegion")
        .value("UnitDisc", AreaRegion::UnitDisc)
        .value("Full", AreaRegion::Full);
    py::class_<SphereMap>(m, "SphereMap")
        .def_static("make", &SphereMap::make, py::arg("n"), py::arg("target"),
                    py::arg("moebius_scale") = Complex(1.0, 0.0))
        .def_readonly("n", &SphereMap::n)
        .def_readonly("target", &SphereMap::target)
        .def_property_readonly("A", [](const SphereMap& s) { return s.A.v; })
        .def_property_readonly("B", [](const SphereMap& s) { return s.B.v; });
    m.def("evaluate_sphere", [](const SphereMap& s, Complex z) {
        return evaluate_sphere(s, ExtComplex::finite(z)).v;
    });
    m.def("evaluate_sphere_at_infinity",
          [](const SphereMap& s) { return evaluate_sphere(s, ExtComplex::infinity()).v; });
    m.def("equivariance_defect", [](const SphereMap& s, const std::vector<Complex>& pts) {
        std::vector<ExtComplex> samples;
        samples.reserve(pts.size() + 1);
        for (Complex z : pts) samples.push_back(ExtComplex::finite(z));
        samples.push_back(ExtComplex::infinity());
        return equivariance_defect(s, samples);
    });
    m.def("fs_area", &fs_area, py::arg("sphere"), py::arg("region"),
          py::arg("quad_tol") = 1e-8);

    py::enum_<Classification>(m, "Classification")
        .value("TrivialRelativeEquilibrium", Classification::TrivialRelativeEquilibrium)
        .value("CentredPolygon", Classification::CentredPolygon)
        .value("NonTrivial", Classification::NonTrivial)
        .value("Unclassified", Classification::Unclassified);

    py::class_<SearchConfig>(m, "SearchConfig")
        .def(py::init<>())
        .def_readwrite("I_level", &SearchConfig::I_level)
        .def_readwrite("energy_target", &SearchConfig::energy_target)
        .def_readwrite("n_starts", &SearchConfig::n_starts)
        .def_readwrite("seed", &SearchConfig::seed)
        .def_readwrite("newton_tol", &SearchConfig::newton_tol)
        .def_readwrite("max_iter", &SearchConfig::max_iter)
        .def_readwrite("perturbation_scale", &SearchConfig::perturbation_scale)
        .def_readwrite("require_nontrivial", &SearchConfig::require_nontrivial)
        .def_readwrite("centred", &SearchConfig::centred)
        .def_readwrite("doubled_seed", &SearchConfig::doubled_seed)
        .def_readwrite("samples_per_segment", &SearchConfig::samples_per_segment)
        .def_readwrite("flow_tol", &SearchConfig::flow_tol);

    py::class_<OrbitResult>(m, "OrbitResult")
        .def_property_readonly("Z0", [](const OrbitResult& o) { return o.Z0.z; })
        .def_readonly("T_seg", &OrbitResult::T_seg)
        .def_readonly("theta", &OrbitResult::theta)
        .def_readonly("residual", &OrbitResult::residual)
        .def_readonly("chore_defect", &OrbitResult::chore_defect)
        .def_readonly("fs_diameter", &OrbitResult::fs_diameter)
        .def_readonly("energy", &OrbitResult::energy)
        .def_readonly("I_level", &OrbitResult::I_level)
        .def_readonly("classification", &OrbitResult::classification)
        .def_readonly("inconsistent_fit", &OrbitResult::inconsistent_fit);

    py::class_<SearchReport>(m, "SearchReport")
        .def_readonly("results", &SearchReport::results)
        .def_property_readonly("n_converged", [](const SearchReport& r) {
            int c = 0;
            for (const auto& s : r.starts) c += s.converged ? 1 : 0;
            return c;
        });

    m.def("search", &search, py::arg("spec"), py::arg("config"),
          py::call_guard<py::gil_scoped_release>());

    m.def("chord_log_sum", [](const RVec& theta, double rho) {
        CircleConfig c;
        c.theta = theta;
        c.rho = rho;
        return chord_log_sum(c);
    });
    m.def("polygon_trap_coefficient", &polygon_trap_coefficient, py::arg("alpha"),
          py::arg("beta"), py::arg("n"));
}
