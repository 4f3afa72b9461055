#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sphjump/kernel.hpp"
#include "sphjump/sphere.hpp"
#include "sphjump/spectral.hpp"

namespace sphjump {

struct EstimatorResult {
    std::vector<double> mean;
    std::vector<double> std_error;  // batch-means standard error of the mean
    long long n_paths = 0;
    int n_batches = 0;
    std::vector<std::vector<double>> batch_means;  // per batch, per statistic
    std::vector<long long> batch_counts;
};

// Monte Carlo average of a vector-valued per-path statistic. The result is
// bit-identical for any worker count: every path stores its value by index
// and the reduction runs in fixed path order. Standard errors come from
// batch means over contiguous path-index blocks.
EstimatorResult mc_expectation(
    long long n_paths, int n_workers,
    const std::function<std::vector<double>(std::uint64_t path_index)>& path_fn,
    int n_batches = 20);

// Zonal function k -> sum_n coeff[n] * G_n(axis . k) on S^d.
struct ZonalFunction {
    int d = 2;
    UnitVector axis = UnitVector::pole(2);
    std::vector<double> coeff;  // Gegenbauer coefficients by degree

    double operator()(const UnitVector& k) const;
    double profile(double s) const;  // value at axis . k = s
};

// Least-squares-free projection of a smooth profile f(axis . k) onto
// normalized Gegenbauer polynomials with the sphere weight
// (1-s^2)^{(d-2)/2}, degrees 0..n_max.
ZonalFunction project_zonal(int d, const std::function<double(double)>& profile,
                            const UnitVector& axis, int n_max);

// Generator action on a zonal function via Funk-Hecke multipliers:
// (L phi)(k) = -sum_n mu[n] coeff[n] G_n(axis . k).
double apply_multipliers(const ZonalFunction& phi, const std::vector<double>& mu,
                         const UnitVector& k);

// Multipliers of the (optionally truncated) collision generator for
// degrees 0..n_max.
std::vector<double> generator_multipliers(const KernelSpec& spec, int n_max,
                                          double eta = 0.0);

// Multipliers of the peaked-forward limit generator -L_beta.
std::vector<double> peaked_limit_multipliers(int d, double beta, double a1,
                                             int n_max);

}  // namespace sphjump
