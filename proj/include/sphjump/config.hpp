#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sphjump/kernel.hpp"

namespace sphjump {

inline constexpr const char* kVersion = "sphjump 1.0.0";

// Resolved run configuration: kernel + process + experiment parameters.
// File/flag parsing lives in the CLI layer; this struct validates and
// resolves defaults (a1 = 0 -> unit-c normalization, eta = 0 -> automatic
// truncation from the bias target).
struct RunConfig {
    // kernel
    int d = 2;
    double beta = 0.5;
    double a1 = 0.0;               // 0 -> normalize so the relaxation rate c is 1
    std::string family = "pure";   // pure | smooth_plus_singular | mollified | peaked
    double mollify_n = 1e4;
    double peak_eps = 0.25;

    // process
    double eta = 0.0;              // 0 -> automatic (bias_target relative to c)
    double bias_target = 0.005;
    double t_max = 1.0;

    // estimation
    long long n_paths = 10000;
    int n_workers = 0;             // 0 -> SPHJUMP_WORKERS env var, else 1
    std::uint64_t seed = 0;

    // experiment sweeps (empty -> documented defaults)
    int n_max = 32;
    std::vector<double> t_grid;
    std::vector<double> eps_list;
    std::vector<double> u_grid;
    double t_large = 0.0;          // 0 -> 10 / c

    // output
    std::string out_dir = ".";

    void validate() const;                 // throws std::invalid_argument
    KernelSpec kernel_spec() const;        // validated kernel
    double resolved_eta(const KernelSpec& spec) const;
    int resolved_workers() const;
    std::vector<double> resolved_t_grid() const;
    std::vector<double> resolved_eps_list() const;
    std::vector<double> resolved_u_grid() const;
    double resolved_t_large(const KernelSpec& spec) const;
    std::string canonical_string() const;  // stable serialization for hashing
    std::uint64_t fingerprint() const;
};

}  // namespace sphjump
