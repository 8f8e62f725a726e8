#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vortex/choreography.hpp"

namespace vortex {

struct SearchConfig {
    double I_level = 1.0;
    std::optional<double> energy_target;
    int n_starts = 16;
    std::uint64_t seed = 0;
    double newton_tol = 1e-9;
    int max_iter = 60;
    std::pair<double, double> T_seg_range{0.0, 0.0};  // (0,0): derive from the n-gon rate
    double perturbation_scale = 0.0;
    bool require_nontrivial = false;
    bool centred = false;            // Euler: pin P = Q = 0
    bool doubled_seed = false;       // seed from the doubled (n/2)-gon (even n)
    int samples_per_segment = 16;
    double flow_tol = 1e-12;

    void validate() const;
};

struct StartReport {
    int start_index = 0;
    bool converged = false;
    double residual = 0.0;
    std::string failure;
};

struct SearchReport {
    std::vector<OrbitResult> results;       // converged candidates sorted by energy
    std::vector<StartReport> starts;        // one entry per start, in index order
};

/// Multi-start Gauss-Newton shooting search for relative choreographies at a
/// prescribed I level (and optionally a prescribed energy). Requires identical
/// vorticities. Deterministic for a fixed seed.
SearchReport search(const SystemSpec& spec, const SearchConfig& cfg);

struct SweepLevelReport {
    double level = 0.0;
    bool found = false;
    double best_residual = std::numeric_limits<double>::infinity();
    std::vector<OrbitResult> results;
    int histogram[4] = {0, 0, 0, 0};  // indexed by Classification
};

struct SweepReport {
    std::vector<SweepLevelReport> levels;
};

/// Runs search with energy_target at each level.
SweepReport energy_sweep(const SystemSpec& spec, const std::vector<double>& levels,
                         const SearchConfig& cfg);

} // namespace vortex
