#pragma once

#include <vector>

#include "nlcl/kernel.hpp"

namespace nlcl {

enum class WeightOrder { first, second };

/**
 * Quadrature weights for the nonlocal interaction integral on a grid of
 * width dx.
 *
 * first order:  w[k-1] = W_k for k = 1..max(r,1) (endpoint rule, with the
 *               remainder of the support folded into W_r).
 * second order: w[k] = W_k for k = 0..r+1 (hat-function rule). W_{r+1} is
 *               stored even when zero so the operator stencil width is
 *               uniformly r+1.
 */
struct WeightTable {
    double dx = 0.0;
    double delta = 0.0;
    int r = 0;
    WeightOrder order = WeightOrder::second;
    std::vector<double> w;

    double sum() const;
};

/** r = floor(delta/dx), nudged so exact grid multiples round down correctly. */
int horizon_cells(double delta, double dx);

WeightTable build_first_order(const KernelSpec& kernel, double dx);
WeightTable build_second_order(const KernelSpec& kernel, double dx);

} // namespace nlcl
