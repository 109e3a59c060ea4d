#include "nlcl/stepping.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

namespace nlcl {

Integrator integrator_from_name(const std::string& name) {
    if (name == "euler")
        return Integrator::euler;
    if (name == "ssprk2")
        return Integrator::ssprk2;
    throw ConfigError("unknown integrator '" + name + "'");
}

CflMode cfl_mode_from_name(const std::string& name) {
    if (name == "warn")
        return CflMode::warn;
    if (name == "enforce")
        return CflMode::enforce;
    if (name == "off")
        return CflMode::off;
    throw ConfigError("unknown cfl mode '" + name + "'");
}

namespace {

int step_counter_for_errors = 0;

void check_finite(const std::vector<double>& v) {
    for (std::size_t j = 0; j < v.size(); ++j)
        if (!std::isfinite(v[j]))
            throw BlowUpError(step_counter_for_errors, static_cast<int>(j));
}

} // namespace

StateField step_forward_euler(const StateField& u, const SpatialOperator& op, double dt) {
    if (dt <= 0.0)
        throw ContractViolation("step size must be positive");
    std::vector<double> L = op(u);
    StateField next = u;
    for (int j = 0; j < u.grid.n; ++j)
        next.values[j] = u.values[j] - dt * L[j];
    next.time = u.time + dt;
    check_finite(next.values);
    return next;
}

StateField step_ssprk2(const StateField& u, const SpatialOperator& op, double dt) {
    StateField star = step_forward_euler(u, op, dt);
    StateField star2 = step_forward_euler(star, op, dt);
    StateField next = u;
    for (int j = 0; j < u.grid.n; ++j)
        next.values[j] = 0.5 * (u.values[j] + star2.values[j]);
    next.time = u.time + dt;
    return next;
}

namespace {

StepRecord record_state(int step, const StateField& u, double l1_change) {
    StepRecord rec;
    rec.step = step;
    rec.t = u.time;
    rec.tv = total_variation(u);
    rec.min = *std::min_element(u.values.begin(), u.values.end());
    rec.max = *std::max_element(u.values.begin(), u.values.end());
    rec.mass = 0.0;
    for (double v : u.values)
        rec.mass += v;
    rec.mass *= u.grid.dx();
    rec.l1_change = l1_change;
    return rec;
}

} // namespace

RunReport run(const StateField& u0, const SchemeDef& scheme, const StepControl& control) {
    if (control.lambda <= 0.0 || control.t_end < 0.0)
        throw ContractViolation("run requires lambda > 0 and t_end >= 0");
    RunReport report;

    double lo = *std::min_element(u0.values.begin(), u0.values.end());
    double hi = *std::max_element(u0.values.begin(), u0.values.end());
    double bound = scheme.flux.cfl_coefficient(lo, hi);
    report.cfl_lambda_bound = control.lambda * bound;
    if (report.cfl_lambda_bound > 1.0 + 1e-12) {
        switch (control.cfl_mode) {
            case CflMode::enforce:
                throw CflError(report.cfl_lambda_bound);
            case CflMode::warn:
                std::cerr << "warning: lambda * B = " << report.cfl_lambda_bound
                          << " exceeds 1; TVD/maximum-principle bounds not guaranteed\n";
                report.cfl_warned = true;
                break;
            case CflMode::off:
                break;
        }
    }

    StateField u = u0;
    report.series.push_back(record_state(0, u, 0.0));
    double dt = control.lambda * u.grid.dx();
    int step = 0;
    while (u.time < control.t_end - 1e-14 * std::max(1.0, control.t_end)) {
        double this_dt = std::min(dt, control.t_end - u.time);
        step_counter_for_errors = step;
        if (control.audit && scheme.scheme == Scheme::nonlocal_second) {
            HartenAudit a = harten_audit(u, scheme.weights, scheme.flux, this_dt);
            if (report.audit)
                report.audit->merge(a);
            else
                report.audit = a;
        }
        StateField prev = std::move(u);
        auto op = [&scheme](const StateField& v) { return scheme.apply(v); };
        u = control.integrator == Integrator::euler ? step_forward_euler(prev, op, this_dt)
                                                    : step_ssprk2(prev, op, this_dt);
        ++step;
        double l1 = l1_distance(u, prev);
        report.series.push_back(record_state(step, u, l1));
    }
    u.time = control.t_end; // clear accumulated roundoff
    report.final_state = std::move(u);
    return report;
}

} // namespace nlcl
