#pragma once

#include <vector>

#include "nlcl/config.hpp"

namespace nlcl {

/**
 * Baseline config text for experiments 1-5. Override lines can be appended
 * before parsing; later keys win.
 */
std::string experiment_preset_text(int id);

/** Parse a preset with `key = value` override lines applied on top. */
Config experiment_preset(int id, const std::vector<std::string>& overrides = {});

/**
 * Run the convergence sweep described by cfg (n_list vs restricted
 * reference at n_ref; reference scheme is cfg's own unless reference_local).
 */
ErrorTable run_convergence(const Config& cfg);

/** Riemann-problem stationarity summary for one flux choice. */
struct StationarityReport {
    NumericalFlux flux = NumericalFlux::godunov;
    double max_deviation = 0.0; // max |u_T - u_0| over cells
    double jump_drift = 0.0;    // |argmax-jump position at T - position at 0|
    double max_jump = 0.0;      // max |u_{j+1} - u_j| at T
    bool flux_criterion = false; // g(uL, uR) == f(uL) == f(uR)
};

StationarityReport stationarity_report(const Config& cfg);

/** Files written by an experiment run. */
struct ExperimentOutput {
    std::vector<std::string> files;
    std::vector<StationarityReport> stationarity; // experiment 4 only
};

/**
 * Execute experiment `id` (1-5) with overrides, writing CSV tables and
 * snapshot files under outdir. Throws on run failure.
 */
ExperimentOutput run_experiment(int id, const std::vector<std::string>& overrides,
                                const std::string& outdir);

} // namespace nlcl
