#pragma once

#include <functional>
#include <vector>

#include "sphjump/quadrature.hpp"

namespace sphjump {

enum class KernelFamily { Pure, SmoothPlusSingular, Mollified, Peaked };

// Collision kernel F(s), s = cos of the scattering angle.
//
// Pure:               F(s) = a1 (1-s)^{-beta-d/2}
// SmoothPlusSingular: F(s) = F1(s) + (1-chi(s)) a1 (1+a2(s)) (1-s)^{-beta-d/2}
// Mollified(n):       singular part evaluated at (1-s+1/n) instead of (1-s)
// Peaked(eps):        F(s) = eps^{beta+d/2} K(eps(1-s)),
//                     K given through k_smooth(t) = K(t) t^{beta+d/2}
struct KernelSpec {
    int d = 2;
    double beta = 0.5;
    double a1 = 1.0;
    KernelFamily family = KernelFamily::Pure;

    // SmoothPlusSingular / Mollified
    std::function<double(double)> smooth_part;   // F1 >= 0 on [-1,1]
    std::function<double(double)> perturbation;  // a2, sup|a2| < 1 on (delta,1)
    double perturbation_sup = 0.0;               // declared bound on sup|a2|
    double delta = 0.6;
    double delta_prime = 0.8;
    double mollify_n = 0.0;    // Mollified regularization index
    bool mollified_pure = false;  // Mollified from a Pure base: no cutoff

    // Peaked
    std::function<double(double)> peak_smooth;  // k_smooth(t) = K(t) t^{beta+d/2}
    double eps = 1.0;

    static KernelSpec pure(int d, double beta, double a1);
    static KernelSpec smooth_plus_singular(int d, double beta, double a1,
                                           std::function<double(double)> f1,
                                           std::function<double(double)> a2 = nullptr,
                                           double a2_sup = 0.0,
                                           double delta = 0.6, double delta_prime = 0.8);
    static KernelSpec mollified(const KernelSpec& base, double n);
    // Default profile k_smooth(t) = a1 exp(-t); pass k_smooth to override.
    static KernelSpec peaked(int d, double beta, double a1, double eps,
                             std::function<double(double)> k_smooth = nullptr);

    // a1 for which the Pure kernel has mathfrak_c == 1 (the default test
    // normalization).
    static double a1_for_unit_c(int d, double beta);

    bool singular_at_one() const;
    // F(s) (1-s)^{beta+d/2}, smooth near s = 1 for singular families.
    double singular_smooth_factor(double s) const;
    double cutoff_chi(double s) const;

    void validate() const;
};

// F(s); throws on s outside [-1,1] or s == 1 for a singular family.
double eval(const KernelSpec& spec, double s);

// F(s) (1-s^2)^{(d-2)/2}, the unnormalized jump-cosine density.
double angular_density(const KernelSpec& spec, double s);

// sigma(S^{d-1}) * integral over (-1, upper) of
//     F(s) h(s) (1-s)^p (1-s^2)^{(d-2)/2} ds,
// with h smooth on [-1,1]. For upper == 1 a singular family requires the net
// endpoint exponent p - beta to exceed 0. This is the workhorse behind every
// kernel moment below.
double kernel_moment(const KernelSpec& spec, const Integrand& h, double p,
                     double upper = 1.0);

// Same integral over (1-eta, 1): the truncated tail.
double kernel_tail_moment(const KernelSpec& spec, const Integrand& h, double p,
                          double eta);

// mathfrak_c = sigma(S^{d-1}) int F(s) (1-s) (1-s^2)^{(d-2)/2} ds.
double mathfrak_c(const KernelSpec& spec);

// Closed form of mathfrak_c for the Pure family (Beta-function identity).
double mathfrak_c_pure_closed_form(int d, double beta, double a1);

// D = I / (mathfrak_c * (d+1)); returns the diagonal value.
double diffusion_matrix_diagonal(const KernelSpec& spec);
std::vector<std::vector<double>> diffusion_matrix(const KernelSpec& spec);

// Total jump rate of the eta-truncated process,
// Lambda(eta) = sigma(S^{d-1}) int_{-1}^{1-eta} F(s) (1-s^2)^{(d-2)/2} ds.
// eta == 0 is allowed only for bounded (non-singular) families.
double truncated_rate(const KernelSpec& spec, double eta);

// c_eta = sigma(S^{d-1}) int_{-1}^{1-eta} F(s)(1-s)(1-s^2)^{(d-2)/2} ds.
double truncated_mean_rate(const KernelSpec& spec, double eta);

// c - c_eta, computed directly as the tail integral; O(eta^{1-beta}).
double truncation_bias_bound(const KernelSpec& spec, double eta);

// Largest eta with truncation_bias_bound(eta) <= target, clamped to
// [eta_min, eta_max]. Used for the automatic truncation choice.
double auto_truncation(const KernelSpec& spec, double target_bias,
                       double eta_min = 1e-9, double eta_max = 0.5);

}  // namespace sphjump
