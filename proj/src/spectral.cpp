#include "sphjump/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "sphjump/common.hpp"

namespace sphjump {

// Normalized recurrence: G_{n+1} = a_n s G_n - b_n G_{n-1} with
// a_n = 2(n+lam)/(n+2lam), b_n = n/(n+2lam), lam = (d-1)/2, a_n - b_n = 1.
double gegenbauer_normalized(int n, int d, double s) {
    if (n < 0) throw std::invalid_argument("gegenbauer: n must be >= 0");
    if (d < 1) throw std::invalid_argument("gegenbauer: d must be >= 1");
    if (n == 0) return 1.0;
    const double lam = 0.5 * (d - 1);
    double gm = 1.0, g = s;
    for (int k = 1; k < n; ++k) {
        double a = 2.0 * (k + lam) / (k + 2.0 * lam);
        double b = k / (k + 2.0 * lam);
        double next = a * s * g - b * gm;
        gm = g;
        g = next;
    }
    return g;
}

std::vector<double> gegenbauer_all(int n_max, int d, double s) {
    std::vector<double> out(n_max + 1);
    out[0] = 1.0;
    if (n_max == 0) return out;
    out[1] = s;
    const double lam = 0.5 * (d - 1);
    for (int k = 1; k < n_max; ++k) {
        double a = 2.0 * (k + lam) / (k + 2.0 * lam);
        double b = k / (k + 2.0 * lam);
        out[k + 1] = a * s * out[k] - b * out[k - 1];
    }
    return out;
}

// Joint recurrence for H_n = (1-G_n)/(1-s):
// H_{n+1} = a_n (G_n + H_n) - b_n H_{n-1}, using a_n - b_n = 1; no
// subtraction of nearly equal values near s = 1.
double gegenbauer_one_minus_ratio(int n, int d, double s) {
    if (n < 0) throw std::invalid_argument("gegenbauer ratio: n must be >= 0");
    if (n == 0) return 0.0;
    const double lam = 0.5 * (d - 1);
    double gm = 1.0, g = s;
    double hm = 0.0, h = 1.0;
    for (int k = 1; k < n; ++k) {
        double a = 2.0 * (k + lam) / (k + 2.0 * lam);
        double b = k / (k + 2.0 * lam);
        double gn = a * s * g - b * gm;
        // 1 - G_{n+1} = a(1 - s G_n) - b(1 - G_{n-1})
        //             = a((1-s)G_n + (1-G_n)) - b(1-G_{n-1})
        double hn = a * (g + h) - b * hm;
        gm = g;
        g = gn;
        hm = h;
        h = hn;
    }
    return h;
}

double laplace_beltrami_eigenvalue(int n, int d) {
    return static_cast<double>(n) * (n + d - 1);
}

long long multiplicity(int d, int n) {
    if (n < 0 || d < 1) throw std::invalid_argument("multiplicity: bad arguments");
    if (n == 0) return 1;
    if (d == 1) return 2;
    double lg = std::log(2.0 * n + d - 1.0) + std::lgamma(n + d - 1.0) -
                std::lgamma(static_cast<double>(d)) - std::lgamma(n + 1.0);
    return std::llround(std::exp(lg));
}

double funk_hecke_mu(const KernelSpec& spec, int n, double eta) {
    if (n < 0) throw std::invalid_argument("funk_hecke_mu: n must be >= 0");
    if (n == 0) return 0.0;
    const int d = spec.d;
    auto h = [n, d](double s) { return gegenbauer_one_minus_ratio(n, d, s); };
    if (eta == 0.0) return kernel_moment(spec, h, 1.0);
    return kernel_moment(spec, h, 1.0, 1.0 - eta);
}

double gamma_multiplier_R(int d, double beta, int n) {
    if (n < 0) throw std::invalid_argument("gamma_multiplier_R: n must be >= 0");
    if (!(beta > 0.0 && beta < 1.0))
        throw std::domain_error("gamma_multiplier_R: beta must lie in (0,1)");
    if (n == 0) return 0.0;
    const double ap = 0.5 * (d + 2.0 * beta);
    const double am = 0.5 * (d - 2.0 * beta);
    const double pref = std::pow(2.0, 2.0 * beta) * std::pow(kPi, 0.5 * d) *
                        std::tgamma(beta) / std::tgamma(0.5 * d + beta);
    // Gamma(n+ap)/Gamma(n+am): both arguments positive for n >= 1.
    double ratio_n = std::exp(std::lgamma(n + ap) - std::lgamma(n + am));
    double const_term;
    if (am == 0.0) {
        if (!(d == 1 && beta == 0.5))
            throw std::domain_error("gamma_multiplier_R: Gamma pole");
        const_term = 0.0;  // Gamma(0) = infinity convention
    } else {
        const_term = std::tgamma(ap) / std::tgamma(am);
    }
    return pref * (ratio_n - const_term);
}

double peaked_mu(int d, double beta, double a1, int n) {
    return funk_hecke_mu(KernelSpec::pure(d, beta, a1), n, 0.0);
}

SpectralTable build_spectral_table(const KernelSpec& spec, int n_max, double eta) {
    SpectralTable t;
    t.d = spec.d;
    t.beta = spec.beta;
    t.eta = eta;
    t.rows.resize(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        SpectralRow& r = t.rows[n];
        r.n = n;
        r.lambda_n = laplace_beltrami_eigenvalue(n, spec.d);
        r.mult_n = multiplicity(spec.d, n);
        r.mu_n = funk_hecke_mu(spec, n, 0.0);
        r.mu_n_eta = eta > 0.0 ? funk_hecke_mu(spec, n, eta) : r.mu_n;
        r.r_n = gamma_multiplier_R(spec.d, spec.beta, n);
        r.mu_peaked_n = peaked_mu(spec.d, spec.beta, spec.a1, n);
    }
    return t;
}

double dirichlet_form_Q(const std::vector<std::vector<double>>& coeffs,
                        const SpectralTable& table) {
    if (coeffs.size() > table.rows.size())
        throw std::invalid_argument("dirichlet_form_Q: coefficients beyond table n_max");
    double q = 0.0;
    for (std::size_t n = 0; n < coeffs.size(); ++n)
        for (double c : coeffs[n]) q += table.rows[n].mu_n * c * c;
    return q;
}

double h_beta_norm_sq(const std::vector<std::vector<double>>& coeffs,
                      const SpectralTable& table) {
    if (coeffs.size() > table.rows.size())
        throw std::invalid_argument("h_beta_norm_sq: coefficients beyond table n_max");
    double v = 0.0;
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        double w = 1.0 + std::pow(table.rows[n].lambda_n, table.beta);
        for (double c : coeffs[n]) v += w * c * c;
    }
    return v;
}

}  // namespace sphjump
