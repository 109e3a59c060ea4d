// Acceptance gate: six end-to-end criteria, one PASS/FAIL line each.
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nlcl/experiments.hpp"

using namespace nlcl;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    if (!ok)
        ++failures;
}

struct GoldenRow {
    int n;
    double error;
    std::optional<double> ooc;
};

bool check_against_golden(const ErrorTable& table, const std::vector<GoldenRow>& golden,
                          double rel_tol, double ooc_tol, std::string& why) {
    if (table.rows.size() != golden.size()) {
        why = "row count mismatch";
        return false;
    }
    for (std::size_t i = 0; i < golden.size(); ++i) {
        const ErrorRow& row = table.rows[i];
        const GoldenRow& gold = golden[i];
        if (row.n != gold.n) {
            why = "resolution mismatch at row " + std::to_string(i);
            return false;
        }
        if (std::abs(row.error - gold.error) > rel_tol * gold.error) {
            char buf[128];
            std::snprintf(buf, sizeof buf, "n=%d error %.3e vs expected %.3e", row.n,
                          row.error, gold.error);
            why = buf;
            return false;
        }
        if (gold.ooc) {
            if (!row.ooc || std::abs(*row.ooc - *gold.ooc) > ooc_tol) {
                char buf[128];
                std::snprintf(buf, sizeof buf, "n=%d ooc %.2f vs expected %.2f", row.n,
                              row.ooc ? *row.ooc : std::nan(""), *gold.ooc);
                why = buf;
                return false;
            }
        }
    }
    return true;
}

// ---- criterion 1: smooth-data error tables ---------------------------------

void criterion1() {
    struct Sweep {
        double p;
        std::vector<GoldenRow> golden;
    };
    const std::vector<Sweep> sweeps = {
        {1.0,
         {{8, 1.440e-02, {}}, {16, 1.948e-03, 2.89}, {32, 4.092e-04, 2.25},
          {64, 9.264e-05, 2.14}, {128, 2.201e-05, 2.07}, {256, 5.146e-06, 2.10},
          {512, 1.021e-06, 2.33}}},
        {0.0,
         {{8, 2.212e-02, {}}, {16, 3.686e-03, 2.59}, {32, 7.048e-04, 2.39},
          {64, 1.473e-04, 2.26}, {128, 3.277e-05, 2.17}, {256, 7.348e-06, 2.16},
          {512, 1.426e-06, 2.37}}},
        {-0.9,
         {{8, 5.250e-02, {}}, {16, 1.951e-02, 1.43}, {32, 6.303e-03, 1.63},
          {64, 1.695e-03, 1.89}, {128, 4.284e-04, 1.98}, {256, 1.003e-04, 2.09},
          {512, 1.982e-05, 2.34}}},
    };
    for (const Sweep& sweep : sweeps) {
        char ptxt[32];
        std::snprintf(ptxt, sizeof ptxt, "p = %g", sweep.p);
        Config cfg = experiment_preset(1, {ptxt});
        ErrorTable table = run_convergence(cfg);
        std::string why;
        bool ok = check_against_golden(table, sweep.golden, 0.25, 0.25, why);
        char detail[160];
        std::snprintf(detail, sizeof detail,
                      "smooth-data table p=%g within 25%%/0.25%s%s", sweep.p,
                      ok ? "" : " -- ", why.c_str());
        report(1, ok, detail);
    }
}

// ---- criterion 2: rate separation across the local shock -------------------

void criterion2() {
    Config nonlocal = experiment_preset(2, {"n_list = 32, 64, 128, 256"});
    Config local = experiment_preset(2, {"scheme = local-second", "n_list = 32, 64, 128, 256"});
    ErrorTable tn = run_convergence(nonlocal);
    ErrorTable tl = run_convergence(local);

    const double paper_nonlocal[] = {2.19, 2.34, 2.40}; // n = 64, 128, 256
    const double paper_local[] = {1.10, 1.16, 1.27};
    bool ok = tn.rows.size() == 4 && tl.rows.size() == 4;
    std::string why = ok ? "" : "row count mismatch";
    for (std::size_t i = 1; ok && i < 4; ++i) {
        double on = tn.rows[i].ooc.value_or(-1.0);
        double ol = tl.rows[i].ooc.value_or(99.0);
        if (on < 1.8 || std::abs(on - paper_nonlocal[i - 1]) > 0.25) {
            why = "nonlocal ooc " + std::to_string(on) + " at n=" +
                  std::to_string(tn.rows[i].n);
            ok = false;
        } else if (ol > 1.3 || std::abs(ol - paper_local[i - 1]) > 0.25) {
            why = "local ooc " + std::to_string(ol) + " at n=" +
                  std::to_string(tl.rows[i].n);
            ok = false;
        }
    }
    report(2, ok, "rate separation (nonlocal >= 1.8, local <= 1.3)" +
                      (ok ? std::string() : " -- " + why));
}

// ---- criterion 3: Riemann stationarity trichotomy --------------------------

void criterion3() {
    auto run_flux = [](const char* flux) {
        Config cfg = experiment_preset(4, {std::string("flux = ") + flux});
        return stationarity_report(cfg);
    };
    StationarityReport god = run_flux("godunov");
    StationarityReport eo = run_flux("engquist-osher");
    StationarityReport lf = run_flux("lax-friedrichs");

    bool ok_god = god.max_deviation <= 1e-12;
    report(3, ok_god, "godunov preserves the balanced step exactly (max dev " +
                          std::to_string(god.max_deviation) + ")");
    bool ok_eo = eo.jump_drift == 0.0 && eo.max_deviation > 1e-3;
    report(3, ok_eo, "engquist-osher: stationary jump but altered profile (drift " +
                         std::to_string(eo.jump_drift) + ", dev " +
                         std::to_string(eo.max_deviation) + ")");
    bool ok_lf = lf.max_jump < 1.0;
    report(3, ok_lf,
           "lax-friedrichs smooths the step (max jump " + std::to_string(lf.max_jump) + ")");

    bool pred = true;
    for (auto nf : {NumericalFlux::godunov, NumericalFlux::upwind, NumericalFlux::downwind})
        pred = pred && FluxSpec::burgers(nf).riemann_stationary(1.0, -1.0);
    pred = pred && !FluxSpec::burgers(NumericalFlux::engquist_osher).riemann_stationary(1.0, -1.0);
    pred = pred &&
           !FluxSpec::burgers(NumericalFlux::lax_friedrichs, 1.0).riemann_stationary(1.0, -1.0);
    report(3, pred, "flux criterion g(1,-1)=f(1) holds exactly for godunov/upwind/downwind");
}

// ---- criterion 4: vanishing-horizon compatibility --------------------------

void criterion4() {
    Config cfg = experiment_preset(5);
    ErrorTable table = run_convergence(cfg);
    bool ok = table.rows.size() == 7 && !table.partial;
    std::string why = ok ? "" : "unexpected table shape";
    for (std::size_t i = 1; ok && i < table.rows.size(); ++i) {
        if (table.rows[i].error >= table.rows[i - 1].error) {
            why = "errors not monotone at n=" + std::to_string(table.rows[i].n);
            ok = false;
        }
    }
    for (std::size_t i = 4; ok && i < table.rows.size(); ++i) { // n = 128, 256, 512
        double o = table.rows[i].ooc.value_or(-1.0);
        if (o < 0.9 || o > 1.3) {
            why = "ooc " + std::to_string(o) + " at n=" + std::to_string(table.rows[i].n);
            ok = false;
        }
    }
    report(4, ok, "horizon-coupled sweep converges to the local reference" +
                      (ok ? std::string() : " -- " + why));
}

// ---- criterion 5: property suite -------------------------------------------

void criterion5() {
    std::mt19937 rng(2024);

    // (a) weight tables nonnegative, summing to one
    {
        std::uniform_real_distribution<double> p_dist(-0.95, 3.0);
        std::uniform_real_distribution<double> ratio(0.2, 10.0);
        bool ok = true;
        for (int trial = 0; trial < 100 && ok; ++trial) {
            double dx = 1.0 / 32;
            KernelSpec k = KernelSpec::power_law(ratio(rng) * dx, p_dist(rng));
            for (const WeightTable& t :
                 {build_second_order(k, dx), build_first_order(k, dx)}) {
                ok = ok && std::abs(t.sum() - 1.0) <= 1e-12;
                for (double w : t.w)
                    ok = ok && w >= -1e-14;
            }
        }
        report(5, ok, "(a) randomized weight tables are a nonnegative partition of unity");
    }

    // (b) the worked weight example: linear kernel, delta = 3 dx
    {
        WeightTable t = build_second_order(KernelSpec::power_law(3.0, 1.0), 1.0);
        const double expect[] = {1.0 / 27, 6.0 / 27, 12.0 / 27, 8.0 / 27, 0.0};
        bool ok = t.w.size() == 5;
        for (int k = 0; ok && k < 5; ++k)
            ok = std::abs(t.w[k] - expect[k]) <= 1e-12;
        report(5, ok, "(b) linear-kernel delta=3dx weights are [1,6,12,8,0]/27");
    }

    // (c) + (d) maximum principle, TVD, and mass conservation per step
    {
        bool ok = true;
        std::string why;
        std::uniform_real_distribution<double> val(-1.0, 1.0);
        for (int trial = 0; trial < 50 && ok; ++trial) {
            Grid1D g(0.0, 1.0, 32, Bc::periodic);
            StateField u{g, std::vector<double>(g.n), 0.0};
            for (double& v : u.values)
                v = val(rng);
            SchemeDef def;
            def.scheme = Scheme::nonlocal_second;
            def.weights = build_second_order(KernelSpec::power_law(0.125, 1.0), g.dx());
            def.flux = FluxSpec::burgers(NumericalFlux::godunov);
            StepControl control;
            control.lambda = 0.4; // B = 2 on [-1, 1] -> lambda B = 0.8
            control.t_end = 20 * control.lambda * g.dx();
            control.cfl_mode = CflMode::enforce;
            RunReport rep = run(u, def, control);
            double m0 = rep.series.front().mass;
            for (std::size_t i = 1; ok && i < rep.series.size(); ++i) {
                const StepRecord& prev = rep.series[i - 1];
                const StepRecord& cur = rep.series[i];
                if (cur.tv > prev.tv + 1e-12) {
                    why = "TV grew";
                    ok = false;
                } else if (cur.max > prev.max + 1e-12 || cur.min < prev.min - 1e-12) {
                    why = "bounds violated";
                    ok = false;
                } else if (std::abs(cur.mass - m0) > 1e-12 * std::max(1.0, std::abs(m0))) {
                    why = "mass drifted";
                    ok = false;
                }
            }
        }
        report(5, ok, "(c)(d) TVD, maximum principle, and mass conservation on random runs" +
                          (ok ? std::string() : " -- " + why));
    }

    // (e) entropy-flux two-form equality and the cell entropy inequality
    {
        auto sign = [](double x) { return x > 0.0 ? 1.0 : x < 0.0 ? -1.0 : 0.0; };
        std::uniform_real_distribution<double> val(-1.0, 1.0);
        bool ok = true;
        std::string why;
        for (auto nf : {NumericalFlux::godunov, NumericalFlux::engquist_osher,
                        NumericalFlux::lax_friedrichs}) {
            FluxSpec g = FluxSpec::burgers(nf, 1.0); // alpha = sup|f'| on [-1, 1]
            double lambda = 0.3;                     // B = 2 (+1 for LF) -> compliant
            if (nf == NumericalFlux::lax_friedrichs)
                lambda = 0.3; // lambda B = 0.9
            for (int i = 0; i < 10'000 && ok; ++i) {
                double a = val(rng), b = val(rng), c = val(rng);
                double two_form =
                    sign(a - c) * (g.numerical(a, std::max(b, c)) -
                                   g.numerical(c, std::max(b, c))) +
                    sign(b - c) * (g.numerical(std::min(a, c), b) -
                                   g.numerical(std::min(a, c), c));
                if (std::abs(g.entropy_flux(a, b, c) - two_form) > 1e-12) {
                    why = "two-form mismatch";
                    ok = false;
                    break;
                }
                // Crandall-Majda cell inequality for the monotone update
                double um = val(rng);
                double u = a, up = b;
                double unew = um - lambda * (g.numerical(um, up) - g.numerical(u, um));
                double bound = std::abs(um - c) -
                               lambda * (g.entropy_flux(um, up, c) -
                                         g.entropy_flux(u, um, c));
                if (std::abs(unew - c) > bound + 1e-12) {
                    why = "cell entropy inequality violated";
                    ok = false;
                }
            }
            if (!ok)
                break;
        }
        report(5, ok, "(e) entropy-flux forms agree and the cell entropy inequality holds" +
                          (ok ? std::string() : " -- " + why));
    }

    // (f) incremental-coefficient margins on compliant runs
    {
        bool ok = true;
        for (int n : {32, 64}) {
            Problem prob;
            prob.kernel.delta = 0.125;
            prob.kernel.p = 1.0;
            prob.lambda = 0.4;
            prob.t_end = 0.1;
            prob.u0 = initial_datum("u01");
            prob.cfl_mode = CflMode::enforce;
            RunReport rep = solve(prob, n, /*audit=*/true);
            ok = ok && rep.audit.has_value() && rep.audit->pass() &&
                 rep.audit->residual <= 1e-11;
        }
        report(5, ok, "(f) incremental-coefficient conditions hold on compliant runs");
    }

    // (g) weight limits as the horizon vanishes
    {
        bool ok = true;
        double dx = 1.0 / 32;
        for (double scale : {0.8, 0.25, 0.05, 0.005}) {
            for (double p : {-0.5, 0.0, 1.0}) {
                WeightTable t = build_second_order(KernelSpec::power_law(scale * dx, p), dx);
                ok = ok && t.w[0] >= 1.0 - scale - 1e-12 && t.w[1] <= scale + 1e-12;
            }
        }
        report(5, ok, "(g) vanishing-horizon weight bounds W0 >= 1-d/dx, W1 <= d/dx");
    }
}

// ---- criterion 6: forward-Euler step against a straight-loop oracle --------

void criterion6() {
    Grid1D g(0.0, 1.0, 16, Bc::periodic);
    StateField u = initial_average(initial_datum("u01"), g);
    WeightTable wt = build_second_order(KernelSpec::power_law(0.125, 1.0), g.dx());
    FluxSpec flux = FluxSpec::burgers(NumericalFlux::godunov);
    double dt = 0.8 * g.dx();

    SchemeDef def{Scheme::nonlocal_second, wt, flux};
    auto op = [&def](const StateField& v) { return def.apply(v); };
    StateField next = step_forward_euler(u, op, dt);

    // independent straight-loop implementation
    int n = g.n;
    auto at = [&](int j) { return u.values[((j % n) + n) % n]; };
    auto mm = [](double x, double y) {
        if (x * y <= 0.0)
            return 0.0;
        return std::abs(x) <= std::abs(y) ? x : y;
    };
    auto godunov = [](double a, double b) {
        auto f = [](double w) { return 0.5 * w * w; };
        return std::max(f(std::max(a, 0.0)), f(std::min(b, 0.0)));
    };
    auto slope = [&](int j) { return mm(at(j + 1) - at(j), at(j) - at(j - 1)); };
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
        double gp = godunov(at(j) + 0.5 * slope(j), at(j + 1) - 0.5 * slope(j + 1));
        double gm = godunov(at(j - 1) + 0.5 * slope(j - 1), at(j) - 0.5 * slope(j));
        double L = wt.w[0] * (gp - gm) / g.dx();
        for (int k = 1; k <= wt.r + 1; ++k)
            L += wt.w[k] * (godunov(at(j), at(j + k)) - godunov(at(j - k), at(j))) /
                 (k * g.dx());
        worst = std::max(worst, std::abs(next.values[j] - (at(j) - dt * L)));
    }
    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "one Euler step matches the straight-loop oracle (max dev %.2e)", worst);
    report(6, worst <= 1e-14, detail);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    if (failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance check(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
