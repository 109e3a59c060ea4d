#include "nlcl/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdio>
#include <ostream>

namespace nlcl {

double total_variation(const StateField& u) {
    double tv = 0.0;
    int n = u.grid.n;
    for (int j = 0; j + 1 < n; ++j)
        tv += std::abs(u.values[j + 1] - u.values[j]);
    if (u.grid.bc == Bc::periodic)
        tv += std::abs(u.values[0] - u.values[n - 1]);
    return tv;
}

double l1_distance(const StateField& u, const StateField& v) {
    if (!(u.grid == v.grid))
        throw ContractViolation("l1_distance requires matching grids");
    double acc = 0.0;
    for (int j = 0; j < u.grid.n; ++j)
        acc += std::abs(u.values[j] - v.values[j]);
    return u.grid.dx() * acc;
}

StateField restrict_field(const StateField& fine, const Grid1D& coarse_grid) {
    const Grid1D& fg = fine.grid;
    if (fg.a != coarse_grid.a || fg.b != coarse_grid.b)
        throw ContractViolation("restriction requires matching domains");
    if (coarse_grid.n <= 0 || fg.n % coarse_grid.n != 0)
        throw ContractViolation("coarse cell count must divide fine cell count");
    int ratio = fg.n / coarse_grid.n;
    StateField c;
    c.grid = coarse_grid;
    c.time = fine.time;
    c.values.resize(coarse_grid.n);
    for (int j = 0; j < coarse_grid.n; ++j) {
        double acc = 0.0;
        for (int i = 0; i < ratio; ++i)
            acc += fine.values[j * ratio + i];
        c.values[j] = acc / ratio;
    }
    return c;
}

JumpInfo track_extreme_jump(const StateField& u) {
    JumpInfo info;
    info.position = u.grid.interface(0);
    info.magnitude = std::abs(u.values[1] - u.values[0]);
    for (int j = 1; j + 1 < u.grid.n; ++j) {
        double jump = std::abs(u.values[j + 1] - u.values[j]);
        if (jump > info.magnitude) {
            info.magnitude = jump;
            info.position = u.grid.interface(j);
        }
    }
    return info;
}

void HartenAudit::merge(const HartenAudit& other) {
    min_coefficient = std::min(min_coefficient, other.min_coefficient);
    linf_margin = std::min(linf_margin, other.linf_margin);
    tv_margin = std::min(tv_margin, other.tv_margin);
    degenerate = degenerate || other.degenerate;
    residual = std::max(residual, other.residual);
}

namespace {

struct DividedDiff {
    double value = 0.0;
    bool degenerate = false;
};

DividedDiff ratio(double num, double den, double scale) {
    if (std::abs(den) < 1e-13 * scale)
        return {0.0, true};
    return {num / den, false};
}

} // namespace

HartenAudit harten_audit(const StateField& u, const WeightTable& wt,
                         const FluxSpec& flux, double dt) {
    if (wt.order != WeightOrder::second)
        throw ContractViolation("harten_audit expects the second-order nonlocal scheme");
    int n = u.grid.n;
    double dx = u.grid.dx();
    double lambda = dt / dx;
    int r = wt.r;
    int w = ghost_width(Scheme::nonlocal_second, r) + r; // room for E/F strides
    std::vector<double> z = pad(u, w);
    std::vector<double> s = limited_slopes(z);

    double umax = 0.0;
    for (double v : u.values)
        umax = std::max(umax, std::abs(v));
    double scale = std::max(1.0, umax);

    HartenAudit audit;
    audit.min_coefficient = std::numeric_limits<double>::infinity();

    auto gmid = [&](int i) { // g(u_i^+, u_{i+1}^-)
        return flux.numerical(z[i] + 0.5 * s[i], z[i + 1] - 0.5 * s[i + 1]);
    };
    auto gself = [&](int i) { // g(u_i^+, u_i^-)
        return flux.numerical(z[i] + 0.5 * s[i], z[i] - 0.5 * s[i]);
    };

    // form-I coefficients per interior cell and the L-infinity condition
    std::vector<double> reconstructed(n, 0.0);
    double worst_sum = 0.0;
    for (int j = 0; j < n; ++j) {
        int i = j + w;
        DividedDiff A = ratio(-lambda * (gmid(i) - gself(i)), z[i + 1] - z[i], scale);
        DividedDiff B = ratio(lambda * (gself(i) - gmid(i - 1)), z[i] - z[i - 1], scale);
        audit.degenerate |= A.degenerate || B.degenerate;
        audit.min_coefficient = std::min({audit.min_coefficient, A.value, B.value});
        double sum = (A.value + B.value) * wt.w[0];
        double upd = (A.value * (z[i + 1] - z[i]) - B.value * (z[i] - z[i - 1])) * wt.w[0];
        double fself = flux.local(z[i]);
        for (int k = 1; k <= r + 1; ++k) {
            DividedDiff C =
                ratio(-lambda * (flux.numerical(z[i], z[i + k]) - fself), z[i + k] - z[i], scale);
            DividedDiff D =
                ratio(lambda * (fself - flux.numerical(z[i - k], z[i])), z[i] - z[i - k], scale);
            audit.degenerate |= C.degenerate || D.degenerate;
            audit.min_coefficient = std::min({audit.min_coefficient, C.value, D.value});
            sum += (C.value + D.value) * wt.w[k] / k;
            upd += (C.value * (z[i + k] - z[i]) - D.value * (z[i] - z[i - k])) * wt.w[k] / k;
        }
        worst_sum = std::max(worst_sum, sum);
        reconstructed[j] = z[i] + upd;
    }
    audit.linf_margin = 1.0 - worst_sum;

    // form-II: per interface, worst A+B+E+F over contributing strides
    double worst_iface = 0.0;
    for (int jf = 0; jf < n; ++jf) { // interface jf+1/2 between cells jf, jf+1
        int i = jf + w;
        double du = z[i + 1] - z[i];
        DividedDiff A = ratio(-lambda * (gmid(i) - gself(i)), du, scale);
        DividedDiff B = ratio(lambda * (gself(i + 1) - gmid(i)), du, scale);
        double Emax = 0.0, Fmax = 0.0;
        for (int l = 1; l <= r + 1; ++l) {
            int jc = i + 1 - l; // cell whose k-sum contributes E at this interface
            DividedDiff E = ratio(
                -lambda * (flux.numerical(z[jc], z[i + 1]) - flux.numerical(z[jc], z[i])), du,
                scale);
            int jd = i + l; // cell contributing F at this interface
            DividedDiff F = ratio(
                lambda * (flux.numerical(z[i + 1], z[jd]) - flux.numerical(z[i], z[jd])), du,
                scale);
            audit.degenerate |= E.degenerate || F.degenerate;
            audit.min_coefficient = std::min({audit.min_coefficient, E.value, F.value});
            Emax = std::max(Emax, E.value);
            Fmax = std::max(Fmax, F.value);
        }
        worst_iface = std::max(worst_iface, A.value + B.value + Emax + Fmax);
    }
    audit.tv_margin = 1.0 - worst_iface;

    // residual check of the incremental-form identity against -dt L(u)
    std::vector<double> L = apply_nonlocal_second_order(u, wt, flux);
    for (int j = 0; j < n; ++j) {
        double direct = u.values[j] - dt * L[j];
        audit.residual = std::max(audit.residual, std::abs(reconstructed[j] - direct));
    }
    return audit;
}

namespace {

void put_sci(std::ostream& os, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    os << buf;
}

} // namespace

void RunReport::write_series_csv(std::ostream& os) const {
    os << "step,t,tv,min,max,mass\n";
    for (const StepRecord& rec : series) {
        os << rec.step << ',';
        put_sci(os, rec.t);
        os << ',';
        put_sci(os, rec.tv);
        os << ',';
        put_sci(os, rec.min);
        os << ',';
        put_sci(os, rec.max);
        os << ',';
        put_sci(os, rec.mass);
        os << '\n';
    }
}

void ErrorTable::write_csv(std::ostream& os) const {
    os << "n,delta,l1_error,ooc\n";
    for (const ErrorRow& row : rows) {
        os << row.n << ',';
        put_sci(os, row.delta);
        os << ',';
        put_sci(os, row.error);
        os << ',';
        if (row.ooc)
            put_sci(os, *row.ooc);
        os << '\n';
    }
}

std::vector<std::optional<double>> observed_orders(std::span<const double> errors) {
    std::vector<std::optional<double>> ooc(errors.size());
    for (std::size_t i = 1; i < errors.size(); ++i)
        if (errors[i] > 0.0 && errors[i - 1] > 0.0)
            ooc[i] = std::log2(errors[i - 1] / errors[i]);
    return ooc;
}

ErrorTable convergence_study(const std::function<StateField(int)>& solve,
                             std::span<const int> ns,
                             const std::function<StateField(int)>& solve_reference,
                             int n_ref, const std::function<double(int)>& delta_of) {
    ErrorTable table;
    for (std::size_t i = 1; i < ns.size(); ++i)
        if (ns[i] <= ns[i - 1])
            throw ContractViolation("resolution list must be ascending");
    for (int n : ns)
        if (n_ref % n != 0)
            throw ContractViolation("every resolution must divide the reference one");

    StateField reference = solve_reference(n_ref);
    std::vector<double> errors;
    for (int n : ns) {
        try {
            StateField approx = solve(n);
            Grid1D coarse(approx.grid.a, approx.grid.b, n, approx.grid.bc);
            StateField ref_c = restrict_field(reference, coarse);
            errors.push_back(l1_distance(approx, ref_c));
        } catch (const BlowUpError&) {
            table.partial = true;
            break;
        }
    }
    auto ooc = observed_orders(errors);
    for (std::size_t i = 0; i < errors.size(); ++i)
        table.rows.push_back({ns[i], delta_of(ns[i]), errors[i], ooc[i]});
    return table;
}

void write_snapshot(std::ostream& os, const StateField& u) {
    for (int j = 0; j < u.grid.n; ++j) {
        put_sci(os, u.grid.center(j));
        os << ' ';
        put_sci(os, u.values[j]);
        os << '\n';
    }
}

} // namespace nlcl
