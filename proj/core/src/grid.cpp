#include "nlcl/grid.hpp"

#include <array>
#include <cmath>

namespace nlcl {

Grid1D::Grid1D(double a_, double b_, int n_, Bc bc_) : a(a_), b(b_), n(n_), bc(bc_) {
    if (n < 4)
        throw ContractViolation("grid needs at least 4 cells");
    if (b <= a)
        throw ContractViolation("grid requires a < b");
}

std::vector<double> pad(const StateField& u, int w) {
    int n = u.grid.n;
    if (static_cast<int>(u.values.size()) != n)
        throw ContractViolation("state length does not match grid");
    std::vector<double> z(n + 2 * w);
    for (int j = 0; j < n; ++j)
        z[j + w] = u.values[j];
    if (u.grid.bc == Bc::periodic) {
        for (int i = 0; i < w; ++i) {
            z[i] = u.values[((i - w) % n + n) % n];
            z[n + w + i] = u.values[i % n];
        }
    } else {
        for (int i = 0; i < w; ++i) {
            z[i] = u.values[0];
            z[n + w + i] = u.values[n - 1];
        }
    }
    return z;
}

StateField initial_average(const std::function<double(double)>& u0, const Grid1D& grid) {
    // 5-point Gauss-Legendre nodes/weights on [-1, 1]
    static const std::array<double, 5> node = {
        -0.906179845938663993, -0.538469310105683091, 0.0,
        0.538469310105683091, 0.906179845938663993};
    static const std::array<double, 5> weight = {
        0.236926885056189088, 0.478628670499366468, 0.568888888888888889,
        0.478628670499366468, 0.236926885056189088};
    StateField u;
    u.grid = grid;
    u.values.resize(grid.n);
    double h = 0.5 * grid.dx();
    for (int j = 0; j < grid.n; ++j) {
        double c = grid.center(j);
        double acc = 0.0;
        for (int q = 0; q < 5; ++q)
            acc += weight[q] * u0(c + h * node[q]);
        u.values[j] = 0.5 * acc;
    }
    return u;
}

} // namespace nlcl
