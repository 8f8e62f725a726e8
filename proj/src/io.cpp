#include "vortex/io.hpp"

#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

namespace vortex {

using nlohmann::json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

const char* family_name(Family f) {
    switch (f) {
    case Family::Euler: return "euler";
    case Family::BEC: return "bec";
    case Family::NLSSites: return "nls-sites";
    }
    return "euler";
}

json state_to_json(const VortexState& Z) {
    json arr = json::array();
    for (int i = 0; i < Z.n(); ++i) arr.push_back({Z.z[i].real(), Z.z[i].imag()});
    return arr;
}

} // namespace

void export_trajectory(const Trajectory& traj, const std::string& path, OutputFormat format) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    if (format == OutputFormat::Json) {
        out << trajectory_to_json(traj).dump(2) << "\n";
        if (!out) throw IoError("write failed: " + path);
        return;
    }
    const int n = traj.spec.n;
    out << "t";
    for (int i = 1; i <= n; ++i) out << ",x" << i << ",y" << i;
    out << ",H,I,P,Q\n";
    for (std::size_t row = 0; row < traj.times.size(); ++row) {
        out << format_double(traj.times[row]);
        const auto& z = traj.states[row].z;
        for (int i = 0; i < n; ++i)
            out << "," << format_double(z[i].real()) << "," << format_double(z[i].imag());
        const auto& fi = traj.integrals[row];
        out << "," << format_double(fi.H) << "," << format_double(fi.I) << ","
            << format_double(fi.P) << "," << format_double(fi.Q) << "\n";
    }
    if (!out) throw IoError("write failed: " + path);
}

json trajectory_to_json(const Trajectory& traj) {
    json rows = json::array();
    for (std::size_t row = 0; row < traj.times.size(); ++row) {
        const auto& fi = traj.integrals[row];
        rows.push_back({{"t", traj.times[row]},
                        {"z", state_to_json(traj.states[row])},
                        {"H", fi.H},
                        {"I", fi.I},
                        {"P", fi.P},
                        {"Q", fi.Q}});
    }
    return {{"family", family_name(traj.spec.family)}, {"n", traj.spec.n}, {"samples", rows}};
}

json orbit_to_json(const OrbitResult& orb) {
    return {{"family", family_name(orb.spec.family)},
            {"n", orb.spec.n},
            {"Z0", state_to_json(orb.Z0)},
            {"T_seg", orb.T_seg},
            {"theta", orb.theta},
            {"residual", orb.residual},
            {"chore_defect", orb.chore_defect},
            {"fs_diameter", orb.fs_diameter},
            {"energy", orb.energy},
            {"I_level", orb.I_level},
            {"classification", classification_name(orb.classification)},
            {"inconsistent_fit", orb.inconsistent_fit}};
}

json search_report_to_json(const SearchReport& report) {
    json results = json::array();
    for (const auto& orb : report.results) results.push_back(orbit_to_json(orb));
    json starts = json::array();
    for (const auto& sr : report.starts)
        starts.push_back({{"start", sr.start_index},
                          {"converged", sr.converged},
                          {"residual", sr.residual},
                          {"failure", sr.failure}});
    return {{"results", results}, {"starts", starts}};
}

json sweep_report_to_json(const SweepReport& report) {
    json levels = json::array();
    for (const auto& lr : report.levels) {
        json results = json::array();
        for (const auto& orb : lr.results) results.push_back(orbit_to_json(orb));
        levels.push_back({{"level", lr.level},
                          {"found", lr.found},
                          {"best_residual", lr.best_residual},
                          {"results", results},
                          {"histogram",
                           {{"trivial_relative_equilibrium", lr.histogram[0]},
                            {"centred_polygon", lr.histogram[1]},
                            {"non_trivial", lr.histogram[2]},
                            {"unclassified", lr.histogram[3]}}}});
    }
    return {{"levels", levels}};
}

} // namespace vortex
