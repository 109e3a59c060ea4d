#include "nlcl/operators.hpp"

namespace nlcl {

Scheme scheme_from_name(const std::string& name) {
    if (name == "first")
        return Scheme::nonlocal_first;
    if (name == "second")
        return Scheme::nonlocal_second;
    if (name == "local-second")
        return Scheme::local_second;
    throw ConfigError("unknown scheme '" + name + "'");
}

std::string to_string(Scheme s) {
    switch (s) {
        case Scheme::nonlocal_first: return "first";
        case Scheme::nonlocal_second: return "second";
        case Scheme::local_second: return "local-second";
    }
    return "?";
}

int ghost_width(Scheme scheme, int r) {
    switch (scheme) {
        case Scheme::nonlocal_first:
            return std::max(r, 1);
        case Scheme::nonlocal_second:
            // r+1 for the widest average pairing plus 1 for the slopes
            return r + 2;
        case Scheme::local_second:
            return 2;
    }
    return 2;
}

std::vector<double> apply_nonlocal_second_order(const StateField& u,
                                                const WeightTable& wt,
                                                const FluxSpec& flux) {
    if (wt.order != WeightOrder::second)
        throw ContractViolation("second-order operator needs second-order weights");
    if (std::abs(wt.dx - u.grid.dx()) > 1e-12 * wt.dx)
        throw ContractViolation("weight table dx does not match grid dx");
    int n = u.grid.n;
    double dx = u.grid.dx();
    int w = ghost_width(Scheme::nonlocal_second, wt.r);
    std::vector<double> z = pad(u, w);
    std::vector<double> s = limited_slopes(z);
    std::vector<double> L(n, 0.0);
    for (int j = 0; j < n; ++j) {
        int i = j + w;
        double gp = flux.numerical(z[i] + 0.5 * s[i], z[i + 1] - 0.5 * s[i + 1]);
        double gm = flux.numerical(z[i - 1] + 0.5 * s[i - 1], z[i] - 0.5 * s[i]);
        double acc = (gp - gm) / dx * wt.w[0];
        for (int k = 1; k <= wt.r + 1; ++k) {
            double gfwd = flux.numerical(z[i], z[i + k]);
            double gbwd = flux.numerical(z[i - k], z[i]);
            acc += (gfwd - gbwd) / (k * dx) * wt.w[k];
        }
        L[j] = acc;
    }
    return L;
}

std::vector<double> apply_nonlocal_first_order(const StateField& u, const WeightTable& wt,
                                               const FluxSpec& flux) {
    if (wt.order != WeightOrder::first)
        throw ContractViolation("first-order operator needs first-order weights");
    if (std::abs(wt.dx - u.grid.dx()) > 1e-12 * wt.dx)
        throw ContractViolation("weight table dx does not match grid dx");
    int n = u.grid.n;
    double dx = u.grid.dx();
    int kmax = std::max(wt.r, 1);
    int w = ghost_width(Scheme::nonlocal_first, wt.r);
    std::vector<double> z = pad(u, w);
    std::vector<double> L(n, 0.0);
    for (int j = 0; j < n; ++j) {
        int i = j + w;
        double acc = 0.0;
        for (int k = 1; k <= kmax; ++k) {
            double gfwd = flux.numerical(z[i], z[i + k]);
            double gbwd = flux.numerical(z[i - k], z[i]);
            acc += (gfwd - gbwd) / (k * dx) * wt.w[k - 1];
        }
        L[j] = acc;
    }
    return L;
}

std::vector<double> apply_local_second_order(const StateField& u, const FluxSpec& flux) {
    int n = u.grid.n;
    double dx = u.grid.dx();
    int w = ghost_width(Scheme::local_second, 0);
    std::vector<double> z = pad(u, w);
    std::vector<double> s = limited_slopes(z);
    std::vector<double> L(n, 0.0);
    for (int j = 0; j < n; ++j) {
        int i = j + w;
        double gp = flux.numerical(z[i] + 0.5 * s[i], z[i + 1] - 0.5 * s[i + 1]);
        double gm = flux.numerical(z[i - 1] + 0.5 * s[i - 1], z[i] - 0.5 * s[i]);
        L[j] = (gp - gm) / dx;
    }
    return L;
}

std::vector<double> SchemeDef::apply(const StateField& u) const {
    switch (scheme) {
        case Scheme::nonlocal_first:
            return apply_nonlocal_first_order(u, weights, flux);
        case Scheme::nonlocal_second:
            return apply_nonlocal_second_order(u, weights, flux);
        case Scheme::local_second:
            return apply_local_second_order(u, flux);
    }
    throw ContractViolation("unreachable scheme");
}

} // namespace nlcl
