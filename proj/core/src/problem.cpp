#include "nlcl/problem.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nlcl/expression.hpp"

namespace nlcl {

KernelSpec KernelChoice::resolve(double dx) const {
    double d = horizon(dx);
    if (power)
        return KernelSpec::power_law(d, p);
    return kernel_from_registry(profile, d);
}

std::function<double(double)> initial_datum(const std::string& selector) {
    using std::numbers::pi;
    if (selector == "u01")
        return [](double x) { return 0.5 * (1.0 + std::sin(2.0 * pi * x)); };
    if (selector == "u02")
        return [](double x) { return -std::sin(pi * x); };
    if (selector == "u03")
        return [](double x) { return 1.0 - std::sin(pi * x); };
    if (selector == "u04")
        return [](double x) { return x < 0.0 ? 1.0 : -1.0; };
    return parse_expression(selector);
}

FluxSpec Problem::resolve_flux(double umin, double umax) const {
    double alpha = 0.0;
    if (flux == NumericalFlux::lax_friedrichs) {
        if (lf_alpha_coupled)
            alpha = 1.0 / lambda;
        else if (lf_alpha)
            alpha = *lf_alpha;
        else
            alpha = std::max(std::abs(umin), std::abs(umax)); // sup |f'| for Burgers
    }
    return FluxSpec::burgers(flux, alpha);
}

SchemeDef Problem::scheme_def(int n) const {
    Grid1D grid = make_grid(n);
    SchemeDef def;
    def.scheme = scheme;
    if (scheme != Scheme::local_second) {
        KernelSpec kern = kernel.resolve(grid.dx());
        def.weights = scheme == Scheme::nonlocal_first ? build_first_order(kern, grid.dx())
                                                       : build_second_order(kern, grid.dx());
    } else {
        def.weights.dx = grid.dx();
    }
    return def;
}

RunReport solve(const Problem& problem, int n, bool audit) {
    if (!problem.u0)
        throw ConfigError("no initial datum configured");
    Grid1D grid = problem.make_grid(n);
    StateField u0 = initial_average(problem.u0, grid);

    SchemeDef def = problem.scheme_def(n);
    double lo = *std::min_element(u0.values.begin(), u0.values.end());
    double hi = *std::max_element(u0.values.begin(), u0.values.end());
    def.flux = problem.resolve_flux(lo, hi);

    StepControl control;
    control.lambda = problem.lambda;
    control.t_end = problem.t_end;
    control.cfl_mode = problem.cfl_mode;
    control.integrator = problem.integrator;
    control.audit = audit;
    return run(u0, def, control);
}

StateField solve_final(const Problem& problem, int n) {
    return solve(problem, n).final_state;
}

} // namespace nlcl
