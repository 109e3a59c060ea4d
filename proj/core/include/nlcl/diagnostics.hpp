#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nlcl/operators.hpp"

namespace nlcl {

/** Total variation; periodic grids include the wrap difference. */
double total_variation(const StateField& u);

/** dx * sum |u_j - v_j|; both fields must share a grid. */
double l1_distance(const StateField& u, const StateField& v);

/** Cell-average restriction of a fine field onto a nested coarser grid. */
StateField restrict_field(const StateField& fine, const Grid1D& coarse_grid);

/** Interface with the largest jump |u_{j+1} - u_j| (leftmost on ties). */
struct JumpInfo {
    double position = 0.0;
    double magnitude = 0.0;
};
JumpInfo track_extreme_jump(const StateField& u);

/** Per-step record of a run. */
struct StepRecord {
    int step = 0;
    double t = 0.0;
    double tv = 0.0;
    double min = 0.0;
    double max = 0.0;
    double mass = 0.0;
    double l1_change = 0.0;
};

/** Worst-case margins of the incremental-coefficient conditions. */
struct HartenAudit {
    double min_coefficient = 0.0; // most negative A/B/C/D/E/F seen
    double linf_margin = 1.0;     // 1 - max_j weighted coefficient sum
    double tv_margin = 1.0;       // 1 - max interface A+B+E+F
    bool degenerate = false;      // some divided difference was zeroed
    double residual = 0.0;        // incremental-form reconstruction residual

    bool pass() const {
        return min_coefficient >= 0.0 && linf_margin >= 0.0 && tv_margin >= 0.0;
    }
    void merge(const HartenAudit& other);
};

/**
 * Incremental-coefficient audit of one forward-Euler step of the
 * second-order nonlocal scheme. Divided differences with near-zero
 * denominators are recorded as 0 and flagged; the reconstructed update is
 * then compared residually against -dt L(u).
 */
HartenAudit harten_audit(const StateField& u, const WeightTable& wt,
                         const FluxSpec& flux, double dt);

struct RunReport {
    std::vector<StepRecord> series; // step count + 1 entries, initial state first
    StateField final_state;
    std::optional<HartenAudit> audit;
    bool cfl_warned = false;
    double cfl_lambda_bound = 0.0; // lambda * B for the run

    void write_series_csv(std::ostream& os) const;
};

/** Error-vs-resolution table with observed orders of convergence. */
struct ErrorRow {
    int n = 0;
    double delta = 0.0;
    double error = 0.0;
    std::optional<double> ooc;
};

struct ErrorTable {
    std::vector<ErrorRow> rows;
    std::string reference; // descriptor of the reference solution
    bool partial = false;  // a run blew up; rows before the failure kept

    void write_csv(std::ostream& os) const;
};

/** OOC column from a list of errors under grid doubling. */
std::vector<std::optional<double>> observed_orders(std::span<const double> errors);

/**
 * Run `solve` for each n, compare against the restricted reference
 * solution, and assemble the error table. `solve` returns the final state;
 * `delta_of` reports the horizon used at resolution n (for the table).
 */
ErrorTable convergence_study(const std::function<StateField(int)>& solve,
                             std::span<const int> ns,
                             const std::function<StateField(int)>& solve_reference,
                             int n_ref, const std::function<double(int)>& delta_of);

/** Two-column whitespace snapshot (x, u), gnuplot-ready. */
void write_snapshot(std::ostream& os, const StateField& u);

} // namespace nlcl
