#pragma once

#include <optional>
#include <string>

#include "nlcl/stepping.hpp"

namespace nlcl {

/** Kernel choice with either a fixed horizon or a horizon coupled to the
 *  grid as delta = coupling * dx. */
struct KernelChoice {
    bool power = true;
    double p = 0.0;
    std::string profile;      // registry name when power == false
    double delta = 0.0;       // fixed horizon (used when coupling == 0)
    double coupling = 0.0;    // delta = coupling * dx when > 0

    double horizon(double dx) const { return coupling > 0.0 ? coupling * dx : delta; }
    KernelSpec resolve(double dx) const;
};

/** Named initial data: u01..u04 or a parsed expression. */
std::function<double(double)> initial_datum(const std::string& selector);

/** Full description of a single solver run, resolution left open. */
struct Problem {
    double domain_a = 0.0;
    double domain_b = 1.0;
    Bc bc = Bc::periodic;
    KernelChoice kernel;
    NumericalFlux flux = NumericalFlux::godunov;
    std::optional<double> lf_alpha;  // Lax-Friedrichs dissipation override
    bool lf_alpha_coupled = false;   // alpha = 1/lambda
    Scheme scheme = Scheme::nonlocal_second;
    double lambda = 0.8;
    double t_end = 0.0;
    Integrator integrator = Integrator::ssprk2;
    CflMode cfl_mode = CflMode::warn;
    std::function<double(double)> u0;

    /** Flux with the Lax-Friedrichs alpha resolved against the data range. */
    FluxSpec resolve_flux(double umin, double umax) const;

    /** Weights and operator bundle at resolution n. */
    SchemeDef scheme_def(int n) const;

    Grid1D make_grid(int n) const { return Grid1D(domain_a, domain_b, n, bc); }
};

/** Project the initial datum and march to t_end at resolution n. */
RunReport solve(const Problem& problem, int n, bool audit = false);

/** Final state only. */
StateField solve_final(const Problem& problem, int n);

} // namespace nlcl
