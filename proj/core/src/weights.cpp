#include "nlcl/weights.hpp"

#include <cmath>
#include <numeric>

namespace nlcl {

double WeightTable::sum() const {
    return std::accumulate(w.begin(), w.end(), 0.0);
}

int horizon_cells(double delta, double dx) {
    if (dx <= 0.0)
        throw ContractViolation("cell width dx must be positive");
    // +1e-12 keeps delta = c*dx (exact multiple intent) from rounding down
    return static_cast<int>(std::floor(delta / dx + 1e-12));
}

WeightTable build_first_order(const KernelSpec& kernel, double dx) {
    WeightTable t;
    t.dx = dx;
    t.delta = kernel.delta();
    t.r = horizon_cells(t.delta, dx);
    t.order = WeightOrder::first;
    int kmax = std::max(t.r, 1);
    t.w.resize(kmax);
    for (int k = 1; k <= kmax; ++k)
        t.w[k - 1] = kernel.moment((k - 1) * dx, k * dx);
    if (t.r >= 1)
        t.w[t.r - 1] += kernel.moment(t.r * dx, std::max(t.delta, t.r * dx));
    return t;
}

WeightTable build_second_order(const KernelSpec& kernel, double dx) {
    WeightTable t;
    t.dx = dx;
    t.delta = kernel.delta();
    t.r = horizon_cells(t.delta, dx);
    t.order = WeightOrder::second;
    t.w.resize(t.r + 2);
    // W_0: falling flank of the hat at 0 over I_1
    t.w[0] = kernel.moment(0.0, dx, {1.0, -1.0 / dx});
    // W_k: hat at k*dx over I_k (rising) and I_{k+1} (falling), k = 1..r+1
    for (int k = 1; k <= t.r + 1; ++k) {
        double rising = kernel.moment((k - 1) * dx, k * dx, {1.0 - k, 1.0 / dx});
        double falling = kernel.moment(k * dx, (k + 1) * dx, {k + 1.0, -1.0 / dx});
        t.w[k] = rising + falling;
    }
    return t;
}

} // namespace nlcl
