#include "nlcl/flux.hpp"

#include <algorithm>
#include <cmath>

namespace nlcl {

NumericalFlux numerical_flux_from_name(const std::string& name) {
    if (name == "godunov")
        return NumericalFlux::godunov;
    if (name == "engquist-osher")
        return NumericalFlux::engquist_osher;
    if (name == "lax-friedrichs")
        return NumericalFlux::lax_friedrichs;
    if (name == "upwind")
        return NumericalFlux::upwind;
    if (name == "downwind")
        return NumericalFlux::downwind;
    throw ConfigError("unknown flux '" + name + "'");
}

std::string to_string(NumericalFlux nf) {
    switch (nf) {
        case NumericalFlux::godunov: return "godunov";
        case NumericalFlux::engquist_osher: return "engquist-osher";
        case NumericalFlux::lax_friedrichs: return "lax-friedrichs";
        case NumericalFlux::upwind: return "upwind";
        case NumericalFlux::downwind: return "downwind";
    }
    return "?";
}

FluxSpec FluxSpec::burgers(NumericalFlux nf, double alpha) {
    FluxSpec s;
    s.kind_ = nf;
    s.alpha_ = alpha;
    s.burgers_ = true;
    return s;
}

FluxSpec FluxSpec::custom(std::function<double(double)> f,
                          std::function<double(double)> fprime, NumericalFlux nf,
                          double alpha) {
    FluxSpec s;
    s.kind_ = nf;
    s.alpha_ = alpha;
    s.burgers_ = false;
    s.f_ = std::move(f);
    s.fprime_ = std::move(fprime);
    return s;
}

double FluxSpec::local(double u) const {
    if (burgers_)
        return 0.5 * u * u;
    return f_(u);
}

namespace {

// min/max of f over [lo, hi] by dense sampling (custom fluxes only).
double sampled_extremum(const std::function<double(double)>& f, double lo, double hi,
                        bool want_max) {
    constexpr int kSamples = 256;
    double best = f(lo);
    for (int i = 1; i <= kSamples; ++i) {
        double v = f(lo + (hi - lo) * i / kSamples);
        best = want_max ? std::max(best, v) : std::min(best, v);
    }
    return best;
}

} // namespace

double FluxSpec::numerical(double u, double v) const {
    switch (kind_) {
        case NumericalFlux::godunov:
            if (burgers_)
                return std::max(local(std::max(u, 0.0)), local(std::min(v, 0.0)));
            return u <= v ? sampled_extremum(f_, u, v, false)
                          : sampled_extremum(f_, v, u, true);
        case NumericalFlux::engquist_osher:
            if (burgers_)
                return local(std::max(u, 0.0)) + local(std::min(v, 0.0));
            {
                // f(0) + int_0^u max(f',0) + int_0^v min(f',0), by sampling
                constexpr int kSamples = 512;
                double plus = 0.0, minus = 0.0;
                for (int i = 0; i < kSamples; ++i) {
                    plus += std::max(fprime_((i + 0.5) * u / kSamples), 0.0) * u / kSamples;
                    minus += std::min(fprime_((i + 0.5) * v / kSamples), 0.0) * v / kSamples;
                }
                return f_(0.0) + plus + minus;
            }
        case NumericalFlux::lax_friedrichs:
            return 0.5 * (local(u) + local(v)) - 0.5 * alpha_ * (v - u);
        case NumericalFlux::upwind:
            return local(u);
        case NumericalFlux::downwind:
            return local(v);
    }
    return 0.0;
}

double FluxSpec::entropy_flux(double a, double b, double c) const {
    return numerical(std::max(a, c), std::max(b, c)) -
           numerical(std::min(a, c), std::min(b, c));
}

double FluxSpec::cfl_coefficient(double m, double M) const {
    if (m > M)
        throw ContractViolation("cfl_coefficient requires m <= M");
    double base;
    if (burgers_) {
        // f' = u: sup d1 g <= max(M,0), sup(-d2 g) <= max(-m,0) for the
        // monotone Burgers fluxes
        base = std::max(M, 0.0) + std::max(-m, 0.0);
    } else {
        // sampled one-sided finite-difference maxima with safety inflation
        constexpr int kGrid = 1024;
        double eps = 1e-6 * std::max(1.0, M - m);
        double sup1 = 0.0, sup2 = 0.0;
        for (int i = 0; i <= kGrid; ++i) {
            for (int j = 0; j <= kGrid; j += 32) {
                double u = m + (M - m) * i / kGrid;
                double v = m + (M - m) * j / kGrid;
                sup1 = std::max(sup1, (numerical(u + eps, v) - numerical(u, v)) / eps);
                sup2 = std::max(sup2, -(numerical(u, v + eps) - numerical(u, v)) / eps);
            }
        }
        return 1.05 * (sup1 + sup2);
    }
    if (kind_ == NumericalFlux::lax_friedrichs)
        base += alpha_; // alpha/2 in each slot
    return base;
}

double FluxSpec::lipschitz_bound(double m, double M) const {
    double fp;
    if (burgers_)
        fp = std::max(std::abs(m), std::abs(M));
    else
        fp = std::max(std::abs(sampled_extremum(fprime_, m, M, true)),
                      std::abs(sampled_extremum(fprime_, m, M, false)));
    if (kind_ == NumericalFlux::lax_friedrichs)
        return 0.5 * fp + 0.5 * alpha_;
    return fp;
}

bool FluxSpec::riemann_stationary(double uL, double uR) const {
    double fl = local(uL);
    double fr = local(uR);
    double g = numerical(uL, uR);
    double scale = std::max({1.0, std::abs(fl), std::abs(fr)});
    return std::abs(fl - fr) <= 1e-12 * scale && std::abs(g - fl) <= 1e-12 * scale;
}

FluxSpec FluxSpec::with_alpha(double alpha) const {
    FluxSpec s = *this;
    s.alpha_ = alpha;
    return s;
}

} // namespace nlcl
