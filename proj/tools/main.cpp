#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "nlcl/experiments.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitBlowUp = 3;
constexpr int kExitCfl = 4;

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("cannot write '" + path + "'");
    return os;
}

int cmd_run(const std::string& config_path) {
    nlcl::Config cfg = nlcl::load_config(config_path);
    nlcl::RunReport report = nlcl::solve(cfg.problem, cfg.n);

    std::ofstream series = open_out(cfg.output_prefix + "_series.csv");
    report.write_series_csv(series);

    for (double t : cfg.snapshot_times) {
        nlcl::Problem sub = cfg.problem;
        sub.t_end = t;
        nlcl::StateField u = nlcl::solve_final(sub, cfg.n);
        char name[256];
        std::snprintf(name, sizeof name, "%s_t%g.dat", cfg.output_prefix.c_str(), t);
        std::ofstream os = open_out(name);
        nlcl::write_snapshot(os, u);
    }
    std::ofstream final_snap = open_out(cfg.output_prefix + "_final.dat");
    nlcl::write_snapshot(final_snap, report.final_state);

    std::cout << "steps: " << report.series.size() - 1
              << "  lambda*B: " << report.cfl_lambda_bound
              << "  final TV: " << report.series.back().tv << "\n";
    return 0;
}

int cmd_convergence(const std::string& config_path) {
    nlcl::Config cfg = nlcl::load_config(config_path);
    nlcl::ErrorTable table = nlcl::run_convergence(cfg);
    std::ofstream os = open_out(cfg.output_prefix + "_errors.csv");
    table.write_csv(os);
    table.write_csv(std::cout);
    return table.partial ? kExitBlowUp : 0;
}

int cmd_experiment(int id, const std::vector<std::string>& overrides,
                   const std::string& outdir) {
    nlcl::ExperimentOutput out = nlcl::run_experiment(id, overrides, outdir);
    for (const std::string& f : out.files)
        std::cout << f << "\n";
    return 0;
}

int cmd_weights(const std::string& config_path) {
    nlcl::Config cfg = nlcl::load_config(config_path);
    if (cfg.problem.scheme == nlcl::Scheme::local_second) {
        std::cerr << "local scheme has no interaction weights\n";
        return kExitConfig;
    }
    nlcl::SchemeDef def = cfg.problem.scheme_def(cfg.n);
    const nlcl::WeightTable& wt = def.weights;
    std::printf("dx = %.6e  delta = %.6e  r = %d  order = %s\n", wt.dx, wt.delta, wt.r,
                wt.order == nlcl::WeightOrder::second ? "second" : "first");
    int k0 = wt.order == nlcl::WeightOrder::second ? 0 : 1;
    for (std::size_t i = 0; i < wt.w.size(); ++i)
        std::printf("W_%zu = %.15e\n", i + k0, wt.w[i]);
    std::printf("sum = %.15e\n", wt.sum());
    return 0;
}

int cmd_fluxcheck(const std::string& flux_name, const std::string& range) {
    auto colon = range.find(':');
    if (colon == std::string::npos)
        throw nlcl::ConfigError("range must be '<min>:<max>'");
    double lo = std::stod(range.substr(0, colon));
    double hi = std::stod(range.substr(colon + 1));
    if (hi < lo)
        throw nlcl::ConfigError("range must be ordered");

    nlcl::NumericalFlux nf = nlcl::numerical_flux_from_name(flux_name);
    double alpha = nf == nlcl::NumericalFlux::lax_friedrichs
                       ? std::max(std::abs(lo), std::abs(hi))
                       : 0.0;
    nlcl::FluxSpec flux = nlcl::FluxSpec::burgers(nf, alpha);

    std::printf("flux: %s\n", nlcl::to_string(nf).c_str());
    if (nf == nlcl::NumericalFlux::lax_friedrichs)
        std::printf("alpha: %.6e\n", alpha);
    std::printf("cfl coefficient B on [%g, %g]: %.6e\n", lo, hi,
                flux.cfl_coefficient(lo, hi));
    std::printf("lipschitz bound: %.6e\n", flux.lipschitz_bound(lo, hi));
    std::printf("g(%g, %g) = %.6e, f(%g) = %.6e, f(%g) = %.6e\n", lo, hi,
                flux.numerical(lo, hi), lo, flux.local(lo), hi, flux.local(hi));
    std::printf("riemann stationary for (uL, uR) = (%g, %g): %s\n", hi, lo,
                flux.riemann_stationary(hi, lo) ? "yes" : "no");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"1-D finite-volume solver for nonlocal pair-interaction conservation laws"};
    app.require_subcommand(1);

    std::string config_path;
    auto* run = app.add_subcommand("run", "run a single configuration");
    run->add_option("config", config_path, "config file")->required();

    std::string conv_path;
    auto* conv = app.add_subcommand("convergence", "run a convergence sweep");
    conv->add_option("config", conv_path, "config file")->required();

    int exp_id = 0;
    std::vector<std::string> exp_overrides;
    std::string exp_outdir = "experiments-out";
    auto* exp = app.add_subcommand("experiment", "run a built-in experiment (1-5)");
    exp->add_option("id", exp_id, "experiment id")->required()->check(CLI::Range(1, 5));
    exp->add_option("--set", exp_overrides, "config override, key=value");
    exp->add_option("--outdir", exp_outdir, "output directory");

    std::string weights_path;
    auto* weights = app.add_subcommand("weights", "print the quadrature weight table");
    weights->add_option("config", weights_path, "config file")->required();

    std::string flux_name, flux_range;
    auto* fluxcheck = app.add_subcommand("fluxcheck", "inspect a numerical flux");
    fluxcheck->add_option("flux", flux_name, "flux name")->required();
    fluxcheck->add_option("range", flux_range, "state range '<min>:<max>'")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run)
            return cmd_run(config_path);
        if (*conv)
            return cmd_convergence(conv_path);
        if (*exp)
            return cmd_experiment(exp_id, exp_overrides, exp_outdir);
        if (*weights)
            return cmd_weights(weights_path);
        if (*fluxcheck)
            return cmd_fluxcheck(flux_name, flux_range);
    } catch (const nlcl::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const nlcl::BlowUpError& e) {
        std::cerr << e.what() << "\n";
        return kExitBlowUp;
    } catch (const nlcl::CflError& e) {
        std::cerr << e.what() << "\n";
        return kExitCfl;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
