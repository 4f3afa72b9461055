#include "sphjump/runner.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "sphjump/common.hpp"
#include "sphjump/estimators.hpp"
#include "sphjump/experiments.hpp"
#include "sphjump/process.hpp"
#include "sphjump/spectral.hpp"

namespace sphjump {

namespace {

void write_file(const RunConfig& config, const std::string& name,
                const std::string& content) {
    std::filesystem::create_directories(config.out_dir);
    std::filesystem::path p = std::filesystem::path(config.out_dir) / name;
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + p.string());
    out << content;
}

nlohmann::ordered_json config_json(const RunConfig& config) {
    nlohmann::ordered_json j;
    j["version"] = kVersion;
    j["fingerprint"] = config.fingerprint();
    j["config"] = config.canonical_string();
    return j;
}

void write_report(const RunConfig& config, const std::string& stem,
                  const ExperimentReport& report) {
    write_file(config, stem + ".csv", report_csv(report));
    nlohmann::ordered_json j = config_json(config);
    j["report"] = nlohmann::ordered_json::parse(report_json(report));
    write_file(config, stem + ".json", j.dump(2) + "\n");
    std::fprintf(stderr, "%s: %s (%.1fs, %lld jumps)\n", report.name.c_str(),
                 report.pass ? "pass" : "FAIL", report.wall_seconds,
                 report.total_jumps);
}

McSettings mc_settings(const RunConfig& config) {
    McSettings mc;
    mc.n_paths = config.n_paths;
    mc.n_workers = config.resolved_workers();
    mc.seed = config.seed;
    return mc;
}

}  // namespace

int run_spectrum(const RunConfig& config) {
    KernelSpec spec = config.kernel_spec();
    double eta = config.resolved_eta(spec);
    SpectralTable table = build_spectral_table(spec, config.n_max, eta);
    std::ostringstream csv;
    csv << "# version=" << kVersion << "\n# fingerprint=" << config.fingerprint()
        << "\n";
    csv << "n,lambda_n,mult_n,mu_n,mu_n_eta,r_n,mu_peaked_n\n";
    for (const auto& row : table.rows)
        csv << row.n << "," << format_double(row.lambda_n) << "," << row.mult_n
            << "," << format_double(row.mu_n) << "," << format_double(row.mu_n_eta)
            << "," << format_double(row.r_n) << ","
            << format_double(row.mu_peaked_n) << "\n";
    write_file(config, "spectrum.csv", csv.str());

    nlohmann::ordered_json j = config_json(config);
    j["eta"] = format_double(eta);
    j["c"] = format_double(mathfrak_c(spec));
    j["mu_1"] = format_double(table.row(1).mu_n);
    write_file(config, "spectrum.json", j.dump(2) + "\n");
    return 0;
}

int run_simulate(const RunConfig& config) {
    KernelSpec spec = config.kernel_spec();
    double eta = config.resolved_eta(spec);
    CosineSampler proto(spec, eta);
    ProcessConfig base;
    base.kernel = spec;
    base.eta = eta;
    base.t_max = config.t_max;
    base.k0 = UnitVector::pole(spec.d);
    base.seed = config.seed;

    std::ostringstream csv;
    csv << "# version=" << kVersion << "\n# fingerprint=" << config.fingerprint()
        << "\n# eta=" << format_double(eta) << "\n";
    csv << "path,jumps,final_cos_k0";
    for (int a = 0; a <= spec.d; ++a) csv << ",m" << a;
    csv << "\n";
    auto path_fn = [&](std::uint64_t i) {
        CosineSampler sampler = proto;
        RngStream rng(config.seed, i);
        Trajectory traj = simulate(base, sampler, rng);
        const UnitVector& m = traj.momentum(config.t_max);
        std::vector<double> out;
        out.push_back(static_cast<double>(traj.jump_count));
        out.push_back(m.dot(base.k0));
        for (int a = 0; a <= spec.d; ++a) out.push_back(m[a]);
        return out;
    };
    // paths are serialized in index order regardless of worker count
    std::vector<std::vector<double>> rows(config.n_paths);
    EstimatorResult unused = mc_expectation(
        config.n_paths, config.resolved_workers(),
        [&](std::uint64_t i) { return rows[i] = path_fn(i); }, 1);
    (void)unused;
    for (long long i = 0; i < config.n_paths; ++i) {
        csv << i << "," << static_cast<long long>(rows[i][0]);
        for (std::size_t j = 1; j < rows[i].size(); ++j)
            csv << "," << format_double(rows[i][j]);
        csv << "\n";
    }
    write_file(config, "paths.csv", csv.str());

    nlohmann::ordered_json j = config_json(config);
    j["eta"] = format_double(eta);
    j["rate"] = format_double(proto.total_rate());
    j["n_paths"] = config.n_paths;
    write_file(config, "simulate.json", j.dump(2) + "\n");
    return 0;
}

int run_moments(const RunConfig& config) {
    KernelSpec spec = config.kernel_spec();
    double eta = config.resolved_eta(spec);
    ExperimentReport r = moment_decay_experiment(
        spec, eta, {1, 2, 3}, config.resolved_t_grid(), mc_settings(config));
    write_report(config, "moments", r);
    return r.pass ? 0 : 1;
}

int run_diffusion(const RunConfig& config) {
    KernelSpec spec = config.kernel_spec();
    double eta = config.resolved_eta(spec);
    ExperimentReport r = diffusion_experiment(
        spec, eta, config.resolved_eps_list(), 1.0, 0.1, mc_settings(config));
    write_report(config, "diffusion", r);
    return r.pass ? 0 : 1;
}

int run_peaked(const RunConfig& config) {
    KernelSpec spec = config.kernel_spec();  // validates parameters
    double a = spec.a1;
    ExperimentReport r = generator_convergence_experiment(
        config.d, config.beta, a, nullptr, {0.5, 0.25, 0.125}, {1, 2, 3}, 100,
        config.seed);
    write_report(config, "generator", r);
    return r.pass ? 0 : 1;
}

int run_invariant(const RunConfig& config) {
    KernelSpec spec = config.kernel_spec();
    double eta = config.resolved_eta(spec);
    ExperimentReport r = invariant_measure_experiment(
        spec, eta, config.resolved_t_large(spec),
        {0.25, 0.5, 0.75, 1.0, 1.25, 1.5}, 0.02, mc_settings(config));
    write_report(config, "invariant", r);
    return r.pass ? 0 : 1;
}

int run_validate(const RunConfig& config) {
    struct Check {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Check> checks;
    auto add = [&](std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    };

    // closed-form relaxation-rate oracle over the parameter grid
    {
        bool ok = true;
        std::string detail;
        for (int d : {1, 2, 3})
            for (double beta : {0.1, 0.3, 0.5, 0.7, 0.9}) {
                KernelSpec s = KernelSpec::pure(d, beta, 1.0);
                double q = mathfrak_c(s);
                double cf = mathfrak_c_pure_closed_form(d, beta, 1.0);
                if (std::abs(q - cf) > 1e-10 * cf) {
                    ok = false;
                    detail = "d=" + std::to_string(d) + " beta=" + format_double(beta);
                }
            }
        add("relaxation-rate closed form (grid)", ok, detail);
    }

    // spectral identities on the configured kernel
    KernelSpec spec = config.kernel_spec();
    {
        double c = mathfrak_c(spec);
        double mu1 = funk_hecke_mu(spec, 1, 0.0);
        add("mu_0 = 0", funk_hecke_mu(spec, 0, 0.0) == 0.0);
        add("mu_1 equals relaxation rate",
            std::abs(mu1 - c) <= 1e-10 * c,
            "mu_1=" + format_double(mu1) + " c=" + format_double(c));
        add("R_0 = 0", gamma_multiplier_R(spec.d, spec.beta, 0) == 0.0);
        if (spec.family == KernelFamily::Pure) {
            double ref = funk_hecke_mu(spec, 1, 0.0) /
                         gamma_multiplier_R(spec.d, spec.beta, 1);
            bool ok = true;
            for (int n = 2; n <= 32; ++n) {
                double ratio = funk_hecke_mu(spec, n, 0.0) /
                               gamma_multiplier_R(spec.d, spec.beta, n);
                if (std::abs(ratio - ref) > 1e-6 * std::abs(ref)) ok = false;
            }
            add("mu_n / R_n constant (n <= 32)", ok);
        }
    }

    // geometry invariants
    {
        RngStream rng(config.seed, 12345);
        bool ok = true;
        for (int i = 0; i < 200; ++i) {
            UnitVector k = uniform_on_sphere(config.d, rng);
            if (std::abs(k.norm() - 1.0) > 1e-12) ok = false;
            UnitVector u = tangent_direction(k, rng);
            if (std::abs(u.dot(k)) > 1e-8) ok = false;
            UnitVector kp = jump(k, 2.0 * rng.uniform() - 1.0, u);
            if (std::abs(kp.norm() - 1.0) > 1e-12) ok = false;
        }
        add("sphere geometry invariants", ok);
    }

    // reduced-size exact-decay Monte Carlo test
    {
        RunConfig mc_cfg = config;
        mc_cfg.n_paths = std::min<long long>(config.n_paths, 10000);
        double eta = config.resolved_eta(spec);
        ExperimentReport r = moment_decay_experiment(spec, eta, {1}, {0.5, 1.0},
                                                     mc_settings(mc_cfg));
        add("exact mean decay (reduced N)", r.pass);
        write_report(config, "validate_moments", r);
    }

    bool all = true;
    std::ostringstream table;
    table << "check,pass,detail\n";
    for (const auto& c : checks) {
        all = all && c.pass;
        table << c.name << "," << (c.pass ? "1" : "0") << "," << c.detail << "\n";
        std::fprintf(stderr, "[%s] %s%s%s\n", c.pass ? "PASS" : "FAIL",
                     c.name.c_str(), c.detail.empty() ? "" : " : ",
                     c.detail.c_str());
    }
    write_file(config, "validate.csv", table.str());
    nlohmann::ordered_json j = config_json(config);
    j["pass"] = all;
    write_file(config, "validate.json", j.dump(2) + "\n");
    return all ? 0 : 1;
}

}  // namespace sphjump
