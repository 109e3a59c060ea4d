#pragma once

#include <functional>
#include <vector>

#include "nlcl/errors.hpp"

namespace nlcl {

enum class Bc { periodic, outflow };

/** Uniform 1-D cell grid on [a, b] with n cells. */
struct Grid1D {
    double a = 0.0;
    double b = 1.0;
    int n = 0;
    Bc bc = Bc::periodic;

    Grid1D() = default;
    Grid1D(double a_, double b_, int n_, Bc bc_);

    double dx() const { return (b - a) / n; }
    double center(int j) const { return a + (j + 0.5) * dx(); }
    double interface(int j) const { return a + (j + 1.0) * dx(); } // x_{j+1/2}

    bool operator==(const Grid1D&) const = default;
};

/** Cell averages on a grid at a time instant. */
struct StateField {
    Grid1D grid;
    std::vector<double> values;
    double time = 0.0;
};

/**
 * Pad with w ghost cells on each side. Periodic ghosts wrap the interior;
 * outflow ghosts copy the nearest interior value.
 */
std::vector<double> pad(const StateField& u, int w);

/** Per-cell averages of u0 by 5-point Gauss-Legendre quadrature. */
StateField initial_average(const std::function<double(double)>& u0, const Grid1D& grid);

} // namespace nlcl
