#pragma once

#include <functional>
#include <vector>

namespace sphjump {

struct QuadRule {
    std::vector<double> nodes;    // in (-1, 1)
    std::vector<double> weights;
};

// Gauss-Legendre rule on [-1, 1]. Cached per n.
const QuadRule& gauss_legendre(int n);

// Gauss-Jacobi rule for the weight (1-x)^a (1+x)^b on [-1, 1], a, b > -1.
// Computed by Golub-Welsch; cached per (n, a, b).
const QuadRule& gauss_jacobi(int n, double a, double b);

using Integrand = std::function<double(double)>;

// integral of f over [lo, hi] with an n-point Gauss-Legendre rule.
double integrate_gl(const Integrand& f, double lo, double hi, int n);

// Adaptive-order version: doubles n from n0 until two refinements agree
// to rel_tol, up to n_max. Throws on non-convergence.
double integrate_adaptive(const Integrand& f, double lo, double hi,
                          double rel_tol = 1e-11, int n0 = 64, int n_max = 4096);

// integral over [lo, hi] of g(s) * (hi - s)^q with q > -1 and g smooth;
// the endpoint weight is handled by a mapped Gauss-Jacobi rule.
double integrate_right_weighted(const Integrand& g, double lo, double hi, double q,
                                double rel_tol = 1e-11, int n0 = 64, int n_max = 4096);

// integral over [lo, hi] of g(s) * (s - lo)^q, same contract.
double integrate_left_weighted(const Integrand& g, double lo, double hi, double q,
                               double rel_tol = 1e-11, int n0 = 64, int n_max = 4096);

// integral of g(s) * (1-s)^{-alpha} over [-1, 1], alpha in (0, 1), g smooth.
// Split at delta_prime: plain Gauss on the left, Jacobi weight on the right.
double quadrature_singular(const Integrand& g, double alpha, double delta_prime = 0.5);

}  // namespace sphjump
