#include "sphjump/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "sphjump/common.hpp"

namespace sphjump {

namespace {

QuadRule compute_gauss_legendre(int n) {
    // Newton iteration on P_n with the Tricomi initial guess.
    QuadRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.nodes[n - 1 - i] = x;
        r.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

QuadRule compute_gauss_jacobi(int n, double a, double b) {
    // Golub-Welsch: eigen-decomposition of the Jacobi recurrence matrix.
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    auto diag = [&](int k) -> double {
        double denom = (2.0 * k + a + b) * (2.0 * k + a + b + 2.0);
        if (k == 0) return (b - a) / (a + b + 2.0);
        return (b * b - a * a) / denom;
    };
    auto offdiag2 = [&](int k) -> double {  // beta_k, k >= 1
        if (k == 1)
            return 4.0 * (1.0 + a) * (1.0 + b) /
                   ((2.0 + a + b) * (2.0 + a + b) * (3.0 + a + b));
        double s = 2.0 * k + a + b;
        return 4.0 * k * (k + a) * (k + b) * (k + a + b) /
               (s * s * (s + 1.0) * (s - 1.0));
    };
    for (int k = 0; k < n; ++k) {
        J(k, k) = diag(k);
        if (k >= 1) {
            double be = std::sqrt(offdiag2(k));
            J(k, k - 1) = be;
            J(k - 1, k) = be;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    const double mu0 = std::pow(2.0, a + b + 1.0) * beta_function(a + 1.0, b + 1.0);
    QuadRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        r.nodes[i] = es.eigenvalues()(i);
        double v0 = es.eigenvectors()(0, i);
        r.weights[i] = mu0 * v0 * v0;
    }
    return r;
}

std::mutex cache_mutex;

}  // namespace

const QuadRule& gauss_legendre(int n) {
    static std::map<int, QuadRule> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
    return it->second;
}

const QuadRule& gauss_jacobi(int n, double a, double b) {
    if (!(a > -1.0 && b > -1.0))
        throw std::domain_error("gauss_jacobi: exponents must be > -1");
    static std::map<std::tuple<int, double, double>, QuadRule> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_tuple(n, a, b);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, compute_gauss_jacobi(n, a, b)).first;
    return it->second;
}

double integrate_gl(const Integrand& f, double lo, double hi, int n) {
    const QuadRule& r = gauss_legendre(n);
    const double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += r.weights[i] * f(mid + half * r.nodes[i]);
    return half * s;
}

namespace {

double refine(const std::function<double(int)>& eval, double rel_tol, int n0, int n_max) {
    double prev = eval(n0);
    for (int n = 2 * n0; n <= n_max; n *= 2) {
        double cur = eval(n);
        if (!std::isfinite(cur))
            throw std::runtime_error("quadrature: non-finite integrand sample");
        if (std::abs(cur - prev) <= rel_tol * (std::abs(cur) + 1e-300)) return cur;
        prev = cur;
    }
    throw std::runtime_error("quadrature: refinement did not converge");
}

}  // namespace

double integrate_adaptive(const Integrand& f, double lo, double hi,
                          double rel_tol, int n0, int n_max) {
    if (hi <= lo) return 0.0;
    return refine([&](int n) { return integrate_gl(f, lo, hi, n); }, rel_tol, n0, n_max);
}

double integrate_right_weighted(const Integrand& g, double lo, double hi, double q,
                                double rel_tol, int n0, int n_max) {
    if (hi <= lo) return 0.0;
    const double half = 0.5 * (hi - lo);
    auto eval = [&](int n) {
        const QuadRule& r = gauss_jacobi(n, q, 0.0);
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            double x = r.nodes[i];
            s += r.weights[i] * g(hi - half * (1.0 - x));
        }
        return std::pow(half, q + 1.0) * s;
    };
    return refine(eval, rel_tol, n0, n_max);
}

double integrate_left_weighted(const Integrand& g, double lo, double hi, double q,
                               double rel_tol, int n0, int n_max) {
    if (hi <= lo) return 0.0;
    const double half = 0.5 * (hi - lo);
    auto eval = [&](int n) {
        const QuadRule& r = gauss_jacobi(n, 0.0, q);
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            double x = r.nodes[i];
            s += r.weights[i] * g(lo + half * (1.0 + x));
        }
        return std::pow(half, q + 1.0) * s;
    };
    return refine(eval, rel_tol, n0, n_max);
}

double quadrature_singular(const Integrand& g, double alpha, double delta_prime) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("quadrature_singular: alpha must lie in (0,1)");
    double left = integrate_adaptive(
        [&](double s) { return g(s) * std::pow(1.0 - s, -alpha); }, -1.0, delta_prime);
    double right = integrate_right_weighted(g, delta_prime, 1.0, -alpha);
    return left + right;
}

}  // namespace sphjump
