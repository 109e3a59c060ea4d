#include "nlcl/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "nlcl/stepping.hpp"

namespace nlcl {

namespace {

const char* kPreset1 = R"(# second- vs first-order sweep, smooth data
domain_a = 0
domain_b = 1
bc = periodic
kernel = power
p = 1
delta = 0.125
flux = godunov
scheme = second
limiter = minmod
lambda = 0.8
t_end = 0.3
integrator = ssprk2
cfl = warn
initial = u01
n = 16
n_list = 8, 16, 32, 64, 128, 256, 512
n_ref = 1024
reference = self
)";

const char* kPreset2 = R"(# local vs nonlocal rates past local shock formation
domain_a = 0
domain_b = 1
bc = periodic
kernel = power
p = -0.5
delta = 0.125
flux = godunov
scheme = second
limiter = minmod
lambda = 0.8
t_end = 0.5
integrator = ssprk2
cfl = warn
initial = u01
n = 32
n_list = 8, 16, 32, 64, 128, 256, 512
n_ref = 1024
reference = self
)";

const char* kPreset3 = R"(# stationary vs moving shock snapshots
domain_a = -1
domain_b = 1
bc = periodic
kernel = power
p = 1
delta = 0.125
flux = godunov
scheme = second
limiter = minmod
lambda = 0.25
t_end = 0.5
integrator = ssprk2
cfl = warn
initial = u02
n = 64
snapshot_times = 0.5
)";

const char* kPreset4 = R"(# Riemann problem under different numerical fluxes
domain_a = -1
domain_b = 1
bc = outflow
kernel = power
p = 0
delta = 0.125
flux = godunov
scheme = second
limiter = minmod
lambda = 0.8
t_end = 1
integrator = ssprk2
cfl = warn
initial = u04
n = 128
snapshot_times = 1
n_list = 8, 16, 32, 64, 128, 256, 512
n_ref = 1024
reference = self
)";

const char* kPreset5 = R"(# vanishing-horizon sweep against the local reference
domain_a = 0
domain_b = 1
bc = periodic
kernel = power
p = 0
delta = 3dx
flux = godunov
scheme = second
limiter = minmod
lambda = 0.8
t_end = 0.5
integrator = ssprk2
cfl = warn
initial = u01
n = 32
n_list = 8, 16, 32, 64, 128, 256, 512
n_ref = 1024
reference = local
)";

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    return os;
}

} // namespace

std::string experiment_preset_text(int id) {
    switch (id) {
        case 1: return kPreset1;
        case 2: return kPreset2;
        case 3: return kPreset3;
        case 4: return kPreset4;
        case 5: return kPreset5;
    }
    throw ConfigError("experiment id must be 1..5, got " + std::to_string(id));
}

Config experiment_preset(int id, const std::vector<std::string>& overrides) {
    std::string text = experiment_preset_text(id);
    for (const std::string& line : overrides)
        text += line + "\n";
    return parse_config(text);
}

ErrorTable run_convergence(const Config& cfg) {
    if (cfg.n_list.empty())
        throw ConfigError("convergence run requires 'n_list'");
    Problem problem = cfg.problem;
    Problem ref_problem = problem;
    if (cfg.reference_local)
        ref_problem.scheme = Scheme::local_second;

    auto solve_at = [&problem](int n) { return solve_final(problem, n); };
    auto solve_ref = [&ref_problem](int n) { return solve_final(ref_problem, n); };
    auto delta_of = [&cfg](int n) {
        if (cfg.problem.scheme == Scheme::local_second)
            return 0.0;
        double dx = (cfg.problem.domain_b - cfg.problem.domain_a) / n;
        return cfg.problem.kernel.horizon(dx);
    };
    ErrorTable table = convergence_study(solve_at, cfg.n_list, solve_ref, cfg.n_ref, delta_of);
    table.reference = (cfg.reference_local ? std::string("local-second")
                                           : to_string(cfg.problem.scheme)) +
                      " n=" + std::to_string(cfg.n_ref);
    return table;
}

StationarityReport stationarity_report(const Config& cfg) {
    StationarityReport rep;
    rep.flux = cfg.problem.flux;

    StateField u0 = initial_average(cfg.problem.u0, cfg.problem.make_grid(cfg.n));
    StateField uT = solve_final(cfg.problem, cfg.n);

    for (int j = 0; j < cfg.n; ++j)
        rep.max_deviation = std::max(rep.max_deviation, std::abs(uT.values[j] - u0.values[j]));
    JumpInfo j0 = track_extreme_jump(u0);
    JumpInfo jT = track_extreme_jump(uT);
    rep.jump_drift = std::abs(jT.position - j0.position);
    rep.max_jump = jT.magnitude;

    double uL = u0.values.front();
    double uR = u0.values.back();
    FluxSpec flux = cfg.problem.resolve_flux(std::min(uL, uR), std::max(uL, uR));
    rep.flux_criterion = flux.riemann_stationary(uL, uR);
    return rep;
}

namespace {

// March step by step so per-step jump tracking and mid-run snapshots come
// from a single trajectory.
void run_with_snapshots(const Config& cfg, const std::filesystem::path& outdir,
                        const std::string& tag, ExperimentOutput& out) {
    Grid1D grid = cfg.problem.make_grid(cfg.n);
    StateField u = initial_average(cfg.problem.u0, grid);
    SchemeDef def = cfg.problem.scheme_def(cfg.n);
    double lo = *std::min_element(u.values.begin(), u.values.end());
    double hi = *std::max_element(u.values.begin(), u.values.end());
    def.flux = cfg.problem.resolve_flux(lo, hi);

    double t_max = cfg.problem.t_end;
    for (double t : cfg.snapshot_times)
        t_max = std::max(t_max, t);
    double dt = cfg.problem.lambda * grid.dx();

    auto snap_path = [&](double t) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%s_t%g.dat", tag.c_str(), t);
        return outdir / buf;
    };

    std::ofstream jumps = open_out(outdir / (tag + "_jumps.csv"));
    jumps << "t,position,magnitude\n";
    auto emit_jump = [&](const StateField& v) {
        JumpInfo info = track_extreme_jump(v);
        char buf[96];
        std::snprintf(buf, sizeof buf, "%.6e,%.6e,%.6e\n", v.time, info.position,
                      info.magnitude);
        jumps << buf;
    };

    std::size_t next_snap = 0;
    std::vector<double> times = cfg.snapshot_times;
    std::sort(times.begin(), times.end());
    auto flush_snaps = [&](const StateField& v) {
        while (next_snap < times.size() && v.time >= times[next_snap] - 1e-12) {
            std::ofstream os = open_out(snap_path(times[next_snap]));
            write_snapshot(os, v);
            out.files.push_back(snap_path(times[next_snap]).string());
            ++next_snap;
        }
    };

    emit_jump(u);
    flush_snaps(u);
    auto op = [&def](const StateField& v) { return def.apply(v); };
    while (u.time < t_max - 1e-12) {
        double this_dt = std::min(dt, t_max - u.time);
        u = cfg.problem.integrator == Integrator::euler ? step_forward_euler(u, op, this_dt)
                                                        : step_ssprk2(u, op, this_dt);
        emit_jump(u);
        flush_snaps(u);
    }
    out.files.push_back((outdir / (tag + "_jumps.csv")).string());
}

void write_table(const ErrorTable& table, const std::filesystem::path& path,
                 ExperimentOutput& out) {
    std::ofstream os = open_out(path);
    table.write_csv(os);
    out.files.push_back(path.string());
}

std::string p_tag(double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "p%g", p);
    std::string s = buf;
    std::replace(s.begin(), s.end(), '-', 'm');
    std::replace(s.begin(), s.end(), '.', '_');
    return s;
}

} // namespace

ExperimentOutput run_experiment(int id, const std::vector<std::string>& overrides,
                                const std::string& outdir_str) {
    std::filesystem::path outdir(outdir_str);
    std::filesystem::create_directories(outdir);
    ExperimentOutput out;

    switch (id) {
        case 1: {
            for (double p : {1.0, 0.0, -0.9}) {
                for (const char* scheme : {"second", "first"}) {
                    std::vector<std::string> ov = {"p = " + std::to_string(p),
                                                   std::string("scheme = ") + scheme};
                    ov.insert(ov.end(), overrides.begin(), overrides.end());
                    Config cfg = experiment_preset(1, ov);
                    write_table(run_convergence(cfg),
                                outdir / ("exp1_" + std::string(scheme) + "_" + p_tag(p) +
                                          ".csv"),
                                out);
                }
            }
            break;
        }
        case 2: {
            for (const char* scheme : {"second", "local-second"}) {
                std::vector<std::string> ov = {std::string("scheme = ") + scheme};
                ov.insert(ov.end(), overrides.begin(), overrides.end());
                Config cfg = experiment_preset(2, ov);
                std::string tag = cfg.problem.scheme == Scheme::local_second ? "local"
                                                                             : "nonlocal";
                write_table(run_convergence(cfg), outdir / ("exp2_" + tag + ".csv"), out);
            }
            break;
        }
        case 3: {
            for (const char* initial : {"u02", "u03"}) {
                for (const char* scheme : {"second", "local-second"}) {
                    std::vector<std::string> ov = {std::string("initial = ") + initial,
                                                   std::string("scheme = ") + scheme};
                    if (std::string(initial) == "u03")
                        ov.push_back("snapshot_times = 0.5, 1.5");
                    ov.insert(ov.end(), overrides.begin(), overrides.end());
                    Config cfg = experiment_preset(3, ov);
                    std::string tag = std::string("exp3_") + initial + "_" +
                                      (cfg.problem.scheme == Scheme::local_second
                                           ? "local"
                                           : "nonlocal");
                    run_with_snapshots(cfg, outdir, tag, out);
                }
            }
            break;
        }
        case 4: {
            std::ofstream report = open_out(outdir / "exp4_stationarity.csv");
            report << "flux,max_deviation,jump_drift,max_jump,flux_criterion\n";
            for (const char* flux : {"godunov", "engquist-osher", "lax-friedrichs"}) {
                std::vector<std::string> ov = {std::string("flux = ") + flux};
                ov.insert(ov.end(), overrides.begin(), overrides.end());
                Config cfg = experiment_preset(4, ov);

                std::string tag = std::string("exp4_riemann_") + flux;
                run_with_snapshots(cfg, outdir, tag, out);

                StationarityReport rep = stationarity_report(cfg);
                out.stationarity.push_back(rep);
                char buf[160];
                std::snprintf(buf, sizeof buf, "%s,%.6e,%.6e,%.6e,%d\n",
                              to_string(rep.flux).c_str(), rep.max_deviation,
                              rep.jump_drift, rep.max_jump, rep.flux_criterion ? 1 : 0);
                report << buf;

                std::vector<std::string> cov = {std::string("flux = ") + flux,
                                                "initial = u02", "bc = periodic"};
                cov.insert(cov.end(), overrides.begin(), overrides.end());
                Config conv = experiment_preset(4, cov);
                write_table(run_convergence(conv),
                            outdir / ("exp4_conv_" + std::string(flux) + ".csv"), out);
            }
            out.files.push_back((outdir / "exp4_stationarity.csv").string());
            break;
        }
        case 5: {
            Config cfg = experiment_preset(5, overrides);
            write_table(run_convergence(cfg), outdir / "exp5.csv", out);
            break;
        }
        default:
            throw ConfigError("experiment id must be 1..5, got " + std::to_string(id));
    }
    return out;
}

} // namespace nlcl
