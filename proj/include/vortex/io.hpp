#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "vortex/search.hpp"

namespace vortex {

enum class OutputFormat { Csv, Json };

/// CSV header is exactly t,x1,y1,...,xn,yn,H,I,P,Q; floats carry 17
/// significant digits. JSON mirrors the field names.
void export_trajectory(const Trajectory& traj, const std::string& path, OutputFormat format);

nlohmann::json trajectory_to_json(const Trajectory& traj);
nlohmann::json orbit_to_json(const OrbitResult& orb);
nlohmann::json search_report_to_json(const SearchReport& report);
nlohmann::json sweep_report_to_json(const SweepReport& report);

/// 17-significant-digit decimal rendering (round-trips doubles).
std::string format_double(double v);

} // namespace vortex
