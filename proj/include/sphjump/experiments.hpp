#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sphjump/estimators.hpp"
#include "sphjump/kernel.hpp"
#include "sphjump/process.hpp"

namespace sphjump {

struct ExperimentPoint {
    std::string label;
    double x = 0.0;  // sweep coordinate (t, eps, eta, ...)
    double estimate = 0.0;
    double std_error = 0.0;
    double oracle = 0.0;
    std::string oracle_kind;  // "closed-form" or "quadrature"
    bool pass = false;
    bool soft = false;  // between 3 and 4 standard errors
};

struct ExperimentReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<ExperimentPoint> points;
    std::vector<std::string> notes;
    bool pass = false;
    long long total_jumps = 0;
    std::uint64_t seed = 0;
    std::uint64_t fingerprint = 0;
    double wall_seconds = 0.0;  // reported to the console only, never serialized
};

struct McSettings {
    long long n_paths = 10000;
    int n_workers = 1;
    std::uint64_t seed = 0;
};

// E[G_n(m(t) . k0)] vs exp(-mu_{n,eta} t) for each requested degree and time.
ExperimentReport moment_decay_experiment(const KernelSpec& spec, double eta,
                                         const std::vector<int>& degrees,
                                         const std::vector<double>& t_grid,
                                         const McSettings& mc);

// Covariance of the diffusively rescaled displacement at t_final vs 2 D t.
// Checks: per-eps max diagonal deviation nonincreasing (with a joint
// noise allowance), final eps diagonals within rel_tol, off-diagonals
// within 3 standard errors of zero.
ExperimentReport diffusion_experiment(const KernelSpec& spec, double eta,
                                      const std::vector<double>& eps_list,
                                      double t_final, double rel_tol,
                                      const McSettings& mc);

// Stationary autocorrelation E[m_j(0) m_l(u)] vs exp(-c_eta u) delta_jl/(d+1).
ExperimentReport green_kubo_experiment(const KernelSpec& spec, double eta,
                                       const std::vector<double>& u_grid,
                                       const McSettings& mc);

// Sup over sampled k of the generator distance between the eps-rescaled
// peaked kernel and its pointwise-limit kernel, per zonal degree; asserts
// strict decrease along eps_list (and exact vanishing when the peak profile
// is a pure power).
ExperimentReport generator_convergence_experiment(
    int d, double beta, double a1, const std::function<double(double)>& k_smooth,
    const std::vector<double>& eps_list, const std::vector<int>& degrees,
    int k_sample_count, std::uint64_t seed);

// Relaxation to the uniform measure: degree-1/2 moments at t_large vanish
// within 3 standard errors, and the fitted degree-1 decay rate over
// fit_t_grid matches c_eta within rate_rel_tol.
ExperimentReport invariant_measure_experiment(const KernelSpec& spec, double eta,
                                              double t_large,
                                              const std::vector<double>& fit_t_grid,
                                              double rate_rel_tol,
                                              const McSettings& mc);

// Truncation robustness: (a) fits the exponent of the quadrature bias
// c - c_eta over eta_grid and checks it is within exponent_tol of 1 - beta;
// (b) compares the diffusion covariance diagonals at eta vs eta/2 against
// the fitted power-law bound plus statistical allowance.
ExperimentReport truncation_robustness_experiment(
    const KernelSpec& spec, double eta, double eps, double t_final,
    const std::vector<double>& eta_fit_grid, double exponent_tol,
    const McSettings& mc);

// Serialization. CSV columns: label,x,estimate,std_error,oracle,oracle_kind,pass.
// JSON mirrors the report (without wall-clock) so outputs are byte-stable.
std::string report_csv(const ExperimentReport& report);
std::string report_json(const ExperimentReport& report);

}  // namespace sphjump
