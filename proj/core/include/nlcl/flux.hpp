#pragma once

#include <functional>
#include <optional>
#include <string>

#include "nlcl/errors.hpp"

namespace nlcl {

enum class NumericalFlux { godunov, engquist_osher, lax_friedrichs, upwind, downwind };

NumericalFlux numerical_flux_from_name(const std::string& name);
std::string to_string(NumericalFlux nf);

/**
 * A local flux f together with a consistent two-point numerical flux g.
 * Burgers (f(u) = u^2/2) ships with closed-form Godunov / Engquist-Osher /
 * Lax-Friedrichs / upwind / downwind fluxes; custom local fluxes fall back
 * to sampled formulas and sampled derivative bounds.
 */
class FluxSpec {
  public:
    static FluxSpec burgers(NumericalFlux nf, double alpha = 0.0);
    static FluxSpec custom(std::function<double(double)> f,
                           std::function<double(double)> fprime,
                           NumericalFlux nf, double alpha = 0.0);

    double local(double u) const;
    double numerical(double u, double v) const;

    /** Kruzkov entropy flux q(a,b;c) = g(a v c, b v c) - g(a ^ c, b ^ c). */
    double entropy_flux(double a, double b, double c) const;

    /**
     * Upper bound B on sup d1 g + sup(-d2 g) over states in [m, M];
     * lambda * B <= 1 is the advisory step-size restriction.
     */
    double cfl_coefficient(double m, double M) const;

    /** Lipschitz constant of g over [m, M]^2. */
    double lipschitz_bound(double m, double M) const;

    /** Whether the Riemann datum (uL, uR) is a stationary entropy solution:
     *  g(uL, uR) = f(uL) = f(uR). */
    bool riemann_stationary(double uL, double uR) const;

    NumericalFlux kind() const { return kind_; }
    double alpha() const { return alpha_; }
    FluxSpec with_alpha(double alpha) const;

  private:
    FluxSpec() = default;

    NumericalFlux kind_ = NumericalFlux::godunov;
    double alpha_ = 0.0; // Lax-Friedrichs dissipation
    bool burgers_ = true;
    std::function<double(double)> f_;
    std::function<double(double)> fprime_;
};

} // namespace nlcl
