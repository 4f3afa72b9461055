#include <cmath>

#include "doctest.h"
#include "sphjump/common.hpp"
#include "sphjump/estimators.hpp"
#include "sphjump/quadrature.hpp"

using namespace sphjump;

TEST_CASE("constant observable has mean 1 and zero error") {
    EstimatorResult r = mc_expectation(
        1000, 2, [](std::uint64_t) { return std::vector<double>{1.0}; });
    CHECK(r.mean[0] == 1.0);
    CHECK(r.std_error[0] == 0.0);
    CHECK(r.n_paths == 1000);
}

TEST_CASE("estimates are bitwise identical across worker counts") {
    auto path_fn = [](std::uint64_t i) {
        RngStream rng(3, i);
        return std::vector<double>{rng.normal(), rng.uniform()};
    };
    EstimatorResult r1 = mc_expectation(5000, 1, path_fn);
    EstimatorResult r3 = mc_expectation(5000, 3, path_fn);
    EstimatorResult r8 = mc_expectation(5000, 8, path_fn);
    for (int j = 0; j < 2; ++j) {
        CHECK(r1.mean[j] == r3.mean[j]);
        CHECK(r1.mean[j] == r8.mean[j]);
        CHECK(r1.std_error[j] == r3.std_error[j]);
        CHECK(r1.std_error[j] == r8.std_error[j]);
    }
}

TEST_CASE("batch standard errors scale like 1/sqrt(n)") {
    auto path_fn = [](std::uint64_t i) {
        RngStream rng(4, i);
        return std::vector<double>{rng.normal()};
    };
    EstimatorResult r = mc_expectation(20000, 4, path_fn);
    CHECK(std::abs(r.mean[0]) <= 4.0 * r.std_error[0]);
    CHECK(r.std_error[0] == doctest::Approx(1.0 / std::sqrt(20000.0)).epsilon(0.2));
}

TEST_CASE("worker exceptions propagate") {
    CHECK_THROWS(mc_expectation(100, 3, [](std::uint64_t i) {
        if (i == 57) throw std::runtime_error("boom");
        return std::vector<double>{0.0};
    }));
}

TEST_CASE("zonal projection recovers polynomial coefficients") {
    const UnitVector axis = UnitVector::pole(2);
    // s^3 = (2 G_3 + 3 G_1) / 5 in the d = 2 (Legendre) basis
    ZonalFunction z =
        project_zonal(2, [](double s) { return s * s * s; }, axis, 5);
    CHECK(z.coeff[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(z.coeff[1] == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(z.coeff[2] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(z.coeff[3] == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(z.profile(0.3) == doctest::Approx(0.027).epsilon(1e-12));
}

TEST_CASE("generator action on zonal eigenfunctions") {
    KernelSpec spec = KernelSpec::pure(2, 0.5, 1.0);
    const UnitVector axis = UnitVector::pole(2);
    std::vector<double> mu = generator_multipliers(spec, 5);

    // constant -> 0
    ZonalFunction c0 = project_zonal(2, [](double) { return 2.5; }, axis, 5);
    // roundoff in the projection is amplified by mu_n ~ n, so allow 1e-10
    CHECK(std::abs(apply_multipliers(c0, mu, axis)) <= 1e-10);

    // phi(k) = k . v at k = v: L phi(v) = -c = -4 sqrt(2) pi
    ZonalFunction g1 = project_zonal(2, [](double s) { return s; }, axis, 5);
    CHECK(apply_multipliers(g1, mu, axis) ==
          doctest::Approx(-4.0 * std::sqrt(2.0) * kPi).epsilon(1e-10));

    // phi = G_2: L phi = -mu_2 G_2 pointwise
    ZonalFunction g2 = project_zonal(
        2, [](double s) { return 0.5 * (3.0 * s * s - 1.0); }, axis, 5);
    RngStream rng(6, 0);
    for (int i = 0; i < 20; ++i) {
        UnitVector k = uniform_on_sphere(2, rng);
        double s = axis.dot(k);
        double expected = -mu[2] * 0.5 * (3.0 * s * s - 1.0);
        CHECK(apply_multipliers(g2, mu, k) ==
              doctest::Approx(expected).epsilon(1e-8));
    }
}

TEST_CASE("Dirichlet form matches the generator pairing") {
    // -<L f, f> over the uniform measure equals sum mu_n |c_n|^2 with
    // orthonormal-basis coefficients, for a zonal f of degree <= 3
    KernelSpec spec = KernelSpec::pure(2, 0.5, 1.0);
    const int d = 2;
    const UnitVector axis = UnitVector::pole(d);
    auto profile = [](double s) { return 0.2 + 0.7 * s - 0.4 * s * s + 0.1 * s * s * s; };
    ZonalFunction f = project_zonal(d, profile, axis, 3);
    std::vector<double> mu = generator_multipliers(spec, 3);

    // left side by quadrature over the sphere (zonal reduction)
    const double weight_norm = azimuthal_area(d) / sphere_area(d + 1);
    auto lf_profile = [&](double s) {
        std::vector<double> g = gegenbauer_all(3, d, s);
        double v = 0.0;
        for (int n = 0; n <= 3; ++n) v -= mu[n] * f.coeff[n] * g[n];
        return v;
    };
    double lhs = -weight_norm *
                 integrate_adaptive(
                     [&](double s) {
                         return lf_profile(s) * profile(s) *
                                std::pow(1.0 - s * s, 0.5 * (d - 2));
                     },
                     -1.0, 1.0);

    // right side: orthonormal coefficients c_n sqrt(||G_n||^2)
    SpectralTable table = build_spectral_table(spec, 3, 0.0);
    std::vector<std::vector<double>> coeffs(4);
    for (int n = 0; n <= 3; ++n) {
        double norm_sq = weight_norm *
                         integrate_adaptive(
                             [&](double s) {
                                 double g = gegenbauer_normalized(n, d, s);
                                 return g * g *
                                        std::pow(1.0 - s * s, 0.5 * (d - 2));
                             },
                             -1.0, 1.0);
        coeffs[n] = {f.coeff[n] * std::sqrt(norm_sq)};
    }
    double rhs = dirichlet_form_Q(coeffs, table);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-6));
    CHECK(h_beta_norm_sq(coeffs, table) > 0.0);
}
