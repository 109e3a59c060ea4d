#pragma once

#include <functional>

#include "nlcl/diagnostics.hpp"
#include "nlcl/operators.hpp"

namespace nlcl {

enum class Integrator { euler, ssprk2 };
enum class CflMode { warn, enforce, off };

Integrator integrator_from_name(const std::string& name);
CflMode cfl_mode_from_name(const std::string& name);

struct StepControl {
    double lambda = 0.8;
    double t_end = 0.0;
    CflMode cfl_mode = CflMode::warn;
    Integrator integrator = Integrator::ssprk2;
    bool audit = false; // collect Harten margins per step (second-order nonlocal only)
};

using SpatialOperator = std::function<std::vector<double>(const StateField&)>;

/** u - dt L(u); throws BlowUpError on non-finite results. */
StateField step_forward_euler(const StateField& u, const SpatialOperator& op, double dt);

/** Two-stage strong-stability-preserving update (u + u**)/2. */
StateField step_ssprk2(const StateField& u, const SpatialOperator& op, double dt);

/**
 * March u0 to control.t_end with dt = lambda dx, shortening the final step
 * to land on t_end exactly. cfl_bound is the flux bound B over the data
 * range; behavior on lambda*B > 1 follows control.cfl_mode.
 */
RunReport run(const StateField& u0, const SchemeDef& scheme, const StepControl& control);

} // namespace nlcl
