#include <cstdio>
#include <exception>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sphjump/config.hpp"
#include "sphjump/runner.hpp"

namespace {

void add_common_options(CLI::App* cmd, sphjump::RunConfig& config) {
    cmd->set_config("--config", "", "Read options from a key=value config file");
    cmd->add_option("--d", config.d, "Sphere dimension d (process lives on S^d)");
    cmd->add_option("--beta", config.beta, "Singularity exponent, in (0,1)");
    cmd->add_option("--a1", config.a1,
                    "Singular amplitude; 0 normalizes the relaxation rate to 1");
    cmd->add_option("--family", config.family,
                    "pure | smooth_plus_singular | mollified | peaked");
    cmd->add_option("--mollify-n", config.mollify_n, "Mollification index");
    cmd->add_option("--peak-eps", config.peak_eps, "Peaked-kernel scale");
    cmd->add_option("--eta", config.eta,
                    "Jump-cosine truncation; 0 selects the automatic choice");
    cmd->add_option("--bias-target", config.bias_target,
                    "Relative truncation bias target for automatic eta");
    cmd->add_option("--tmax", config.t_max, "Simulation horizon");
    cmd->add_option("--paths", config.n_paths, "Monte Carlo path count");
    cmd->add_option("--workers", config.n_workers,
                    "Worker threads; 0 reads SPHJUMP_WORKERS, else 1");
    cmd->add_option("--seed", config.seed, "Master seed");
    cmd->add_option("--nmax", config.n_max, "Largest spherical-harmonic degree");
    cmd->add_option("--t-grid", config.t_grid, "Observation times");
    cmd->add_option("--eps-list", config.eps_list, "Diffusive scales");
    cmd->add_option("--u-grid", config.u_grid, "Autocorrelation lags");
    cmd->add_option("--t-large", config.t_large,
                    "Relaxation horizon; 0 selects 10 / c");
    cmd->add_option("--out", config.out_dir, "Output directory");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jump-process simulator for singular sphere collision kernels"};
    app.require_subcommand(1);

    sphjump::RunConfig config;
    int (*runner)(const sphjump::RunConfig&) = nullptr;

    struct Sub {
        const char* name;
        const char* help;
        int (*fn)(const sphjump::RunConfig&);
    };
    const Sub subs[] = {
        {"spectrum", "Tabulate eigenvalues, multiplicities and multipliers",
         sphjump::run_spectrum},
        {"simulate", "Simulate trajectories and dump per-path summaries",
         sphjump::run_simulate},
        {"moments", "Moment-decay experiment vs exact truncated oracles",
         sphjump::run_moments},
        {"diffusion", "Diffusive-rescaling covariance experiment",
         sphjump::run_diffusion},
        {"peaked", "Peaked-kernel generator-convergence experiment",
         sphjump::run_peaked},
        {"invariant", "Relaxation to the uniform measure + rate fit",
         sphjump::run_invariant},
        {"validate", "Run the full oracle/invariant suite",
         sphjump::run_validate},
    };
    for (const Sub& s : subs) {
        CLI::App* cmd = app.add_subcommand(s.name, s.help);
        add_common_options(cmd, config);
        cmd->callback([&runner, fn = s.fn]() { runner = fn; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        config.validate();
        return runner(config);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
