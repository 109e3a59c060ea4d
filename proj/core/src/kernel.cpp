#include "nlcl/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nlcl {

namespace {

constexpr double kQuadTol = 1e-12;
constexpr int kMaxDepth = 16; // 2^16 subdivision cap

// Adaptive Simpson with absolute tolerance. f must be finite on (a, b).
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double fa, double fm, double fb, double whole, double tol,
                        int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    double flm = f(lm);
    double frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double err = left + right - whole;
    if (std::abs(err) <= 15.0 * tol)
        return left + right + err / 15.0;
    if (depth >= kMaxDepth)
        throw QuadratureError("adaptive quadrature did not converge", std::abs(err));
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = kQuadTol) {
    if (b <= a)
        return 0.0;
    double m = 0.5 * (a + b);
    double fa = f(a);
    double fm = f(m);
    double fb = f(b);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 0);
}

} // namespace

KernelSpec KernelSpec::power_law(double delta, double p) {
    if (delta <= 0.0)
        throw ContractViolation("kernel horizon delta must be positive");
    if (p <= -1.0)
        throw ContractViolation("power-law exponent must satisfy p > -1");
    KernelSpec k;
    k.delta_ = delta;
    k.power_ = true;
    k.p_ = p;
    k.name_ = "power";
    return k;
}

KernelSpec KernelSpec::custom(double delta, std::function<double(double)> profile,
                              std::string name) {
    if (delta <= 0.0)
        throw ContractViolation("kernel horizon delta must be positive");
    KernelSpec k;
    k.delta_ = delta;
    k.power_ = false;
    k.profile_ = std::move(profile);
    k.name_ = std::move(name);
    return k;
}

double KernelSpec::exponent() const {
    if (!power_)
        throw ContractViolation("exponent() requires a power-law kernel");
    return p_;
}

double KernelSpec::operator()(double h) const {
    if (h < 0.0 || h > delta_)
        return 0.0;
    if (power_) {
        double c = (1.0 + p_) / std::pow(delta_, 1.0 + p_);
        return c * std::pow(h, p_);
    }
    return profile_(h);
}

double KernelSpec::normalization_integral() const {
    if (power_)
        return 1.0; // normalized by construction
    return integrate(profile_, 0.0, delta_);
}

GrowthResult KernelSpec::growth_condition_value() const {
    GrowthResult res;
    if (power_) {
        // integral of c h^(p-1): converges iff p > 0, value (1+p)/(p delta).
        if (p_ > 0.0) {
            res.kind = GrowthResult::Kind::finite;
            res.value = (1.0 + p_) / (p_ * delta_);
        } else {
            res.kind = GrowthResult::Kind::infinite;
            res.value = std::numeric_limits<double>::infinity();
        }
        return res;
    }
    // Dyadic partial integrals over [delta 2^-(m+1), delta 2^-m] near zero,
    // plus the bulk [delta/2, delta]. The partial sums must form a Cauchy
    // sequence within 60 levels, else the result is inconclusive.
    auto integrand = [this](double h) { return profile_(h) / h; };
    double total = 0.0;
    try {
        total = integrate(integrand, 0.5 * delta_, delta_, 1e-12);
        double hi = 0.5 * delta_;
        double prev_term = std::numeric_limits<double>::infinity();
        int flat_levels = 0;
        for (int m = 0; m < 60; ++m) {
            double lo = 0.5 * hi;
            double term = integrate(integrand, lo, hi, 1e-13);
            total += term;
            if (term < 1e-14 * std::max(total, 1.0)) {
                res.kind = GrowthResult::Kind::finite;
                res.value = total;
                return res;
            }
            if (term >= 0.999 * prev_term)
                ++flat_levels;
            else
                flat_levels = 0;
            if (flat_levels >= 10) {
                res.kind = GrowthResult::Kind::infinite;
                res.value = std::numeric_limits<double>::infinity();
                return res;
            }
            prev_term = term;
            hi = lo;
        }
    } catch (const QuadratureError&) {
        res.kind = GrowthResult::Kind::unknown;
        return res;
    }
    res.kind = GrowthResult::Kind::unknown;
    return res;
}

double KernelSpec::moment(double a, double b, AffineWeight w) const {
    if (a < 0.0 || b < a)
        throw ContractViolation("moment requires 0 <= a <= b");
    // clip to kernel support
    double lo = std::max(a, 0.0);
    double hi = std::min(b, delta_);
    if (hi <= lo)
        return 0.0;
    if (power_) {
        double c = (1.0 + p_) / std::pow(delta_, 1.0 + p_);
        double q1 = p_ + 1.0;
        double q2 = p_ + 2.0;
        double term_a = w.a * (std::pow(hi, q1) - std::pow(lo, q1)) / q1;
        double term_b = w.b * (std::pow(hi, q2) - std::pow(lo, q2)) / q2;
        return c * (term_a + term_b);
    }
    auto f = [this, w](double h) { return w(h) * profile_(h); };
    return integrate(f, lo, hi);
}

KernelSpec kernel_from_registry(const std::string& name, double delta) {
    if (name == "linear-ramp") {
        // omega(h) = 2h/delta^2, the linearly increasing normalized profile
        return KernelSpec::custom(
            delta, [delta](double h) { return 2.0 * h / (delta * delta); }, name);
    }
    if (name == "uniform") {
        return KernelSpec::custom(
            delta, [delta](double) { return 1.0 / delta; }, name);
    }
    throw ConfigError("unknown kernel profile '" + name + "'");
}

} // namespace nlcl
