#pragma once

#include <vector>

#include "sphjump/kernel.hpp"

namespace sphjump {

// Degree-n Gegenbauer polynomial with parameter (d-1)/2, normalized so
// G_n(1) = 1 (Legendre for d=2, Chebyshev T_n for d=1).
double gegenbauer_normalized(int n, int d, double s);

// (1 - G_n(s)) / (1 - s), evaluated by a cancellation-free recurrence;
// equals G_n'(1) = n(n+d-1)/d at s = 1.
double gegenbauer_one_minus_ratio(int n, int d, double s);

// Values G_0(s) .. G_nmax(s) in one recurrence pass.
std::vector<double> gegenbauer_all(int n_max, int d, double s);

double laplace_beltrami_eigenvalue(int n, int d);  // n(n+d-1)

// Dimension of the degree-n spherical-harmonic space on S^d.
long long multiplicity(int d, int n);

// Funk-Hecke eigenvalue of -L on degree-n harmonics, truncated at eta:
// mu_{n,eta} = sigma(S^{d-1}) int_{-1}^{1-eta} F(s)(1-G_n(s))(1-s^2)^{(d-2)/2} ds.
// eta = 0 gives the full eigenvalue (the 1-s cancellation is factored
// analytically).
double funk_hecke_mu(const KernelSpec& spec, int n, double eta = 0.0);

// Fourier multiplier of the sphere operator R_beta, printed Gamma-ratio form.
// For d=1, beta=1/2 the subtracted constant term is 0 by the Gamma(0)
// convention. Known only up to an n-independent constant; tests use the
// n-dependence.
double gamma_multiplier_R(int d, double beta, int n);

// Eigenvalue of the peaked-forward limit generator on degree n: the
// Funk-Hecke eigenvalue of the pointwise kernel limit F(s) = a1 (1-s)^{-beta-d/2}.
// (For a pure-power peak profile the rescaled kernel equals this limit at
// every scale, so the generator distance is identically zero.)
double peaked_mu(int d, double beta, double a1, int n);

struct SpectralRow {
    int n = 0;
    double lambda_n = 0.0;
    long long mult_n = 0;
    double mu_n = 0.0;
    double mu_n_eta = 0.0;
    double r_n = 0.0;
    double mu_peaked_n = 0.0;
};

struct SpectralTable {
    int d = 2;
    double beta = 0.5;
    double eta = 0.0;
    std::vector<SpectralRow> rows;  // degrees 0 .. n_max

    const SpectralRow& row(int n) const { return rows.at(n); }
};

SpectralTable build_spectral_table(const KernelSpec& spec, int n_max, double eta);

// Q(f,f) = sum_{n,m} mu_n |c_{n,m}|^2 for coefficients grouped by degree
// (coeffs[n] holds the M(d,n) coefficients of degree n).
double dirichlet_form_Q(const std::vector<std::vector<double>>& coeffs,
                        const SpectralTable& table);

// H^beta-norm surrogate sum (1 + lambda_n^beta) |c_{n,m}|^2.
double h_beta_norm_sq(const std::vector<std::vector<double>>& coeffs,
                      const SpectralTable& table);

}  // namespace sphjump
