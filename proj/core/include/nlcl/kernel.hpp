#pragma once

#include <functional>
#include <string>

#include "nlcl/errors.hpp"

namespace nlcl {

/** Affine weight function h -> a + b*h used in moment integrals. */
struct AffineWeight {
    double a = 1.0;
    double b = 0.0;
    double operator()(double h) const { return a + b * h; }
};

/** Outcome of evaluating the near-zero growth integral of a kernel. */
struct GrowthResult {
    enum class Kind { finite, infinite, unknown };
    Kind kind = Kind::unknown;
    double value = 0.0; // meaningful only when kind == finite

    bool is_finite() const { return kind == Kind::finite; }
};

/**
 * An interaction kernel on [0, delta]: nonnegative, supported on [0, delta],
 * integrating to one. Either a power-law profile ((1+p)/delta^(1+p)) h^p
 * with p > -1, or a custom profile evaluated pointwise.
 *
 * Immutable after construction; all member functions are pure.
 */
class KernelSpec {
  public:
    static KernelSpec power_law(double delta, double p);
    static KernelSpec custom(double delta, std::function<double(double)> profile,
                             std::string name = "custom");

    double delta() const { return delta_; }
    bool is_power_law() const { return power_; }
    double exponent() const; // power-law only
    const std::string& name() const { return name_; }

    /** Pointwise evaluation; zero outside [0, delta]. */
    double operator()(double h) const;

    /** Integral of the kernel over its support. Exactly 1 for power laws. */
    double normalization_integral() const;

    /** The growth integral of omega(h)/h over (0, delta], possibly infinite. */
    GrowthResult growth_condition_value() const;

    /**
     * Integral of (w.a + w.b*h) * omega(h) over [a, b] clipped to [0, delta].
     * Closed form for power laws, adaptive quadrature otherwise.
     */
    double moment(double a, double b, AffineWeight w = {}) const;

  private:
    KernelSpec() = default;

    double delta_ = 0.0;
    bool power_ = true;
    double p_ = 0.0;
    std::function<double(double)> profile_;
    std::string name_;
};

/** Built-in custom profile registry (config `kernel = custom`). */
KernelSpec kernel_from_registry(const std::string& name, double delta);

} // namespace nlcl
