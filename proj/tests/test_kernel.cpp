#include <cmath>

#include "doctest.h"
#include "sphjump/common.hpp"
#include "sphjump/kernel.hpp"

using namespace sphjump;

TEST_CASE("relaxation rate matches the Beta closed form on the grid") {
    for (int d : {1, 2, 3}) {
        for (double beta : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            KernelSpec spec = KernelSpec::pure(d, beta, 1.3);
            double q = mathfrak_c(spec);
            double cf = mathfrak_c_pure_closed_form(d, beta, 1.3);
            CHECK(std::abs(q - cf) <= 1e-10 * cf);
        }
    }
}

TEST_CASE("d=2, beta=1/2 closed form evaluates to 4 sqrt(2) pi") {
    double c = mathfrak_c(KernelSpec::pure(2, 0.5, 1.0));
    CHECK(c == doctest::Approx(4.0 * std::sqrt(2.0) * kPi).epsilon(1e-12));
}

TEST_CASE("truncated rate and truncated mean rate, d=2 beta=1/2") {
    KernelSpec spec = KernelSpec::pure(2, 0.5, 1.0);
    const double eta = 0.01;
    // Lambda(eta) = 4 pi (eta^{-1/2} - 2^{-1/2})
    double lam = truncated_rate(spec, eta);
    CHECK(lam == doctest::Approx(4.0 * kPi * (10.0 - 1.0 / std::sqrt(2.0)))
                     .epsilon(1e-11));
    // c_eta = 4 pi (sqrt 2 - sqrt eta)
    double ceta = truncated_mean_rate(spec, eta);
    CHECK(ceta == doctest::Approx(4.0 * kPi * (std::sqrt(2.0) - 0.1))
                      .epsilon(1e-11));
    // tail bias c - c_eta = 4 pi sqrt(eta)
    double bias = truncation_bias_bound(spec, eta);
    CHECK(bias == doctest::Approx(4.0 * kPi * 0.1).epsilon(1e-10));
    CHECK(mathfrak_c(spec) - ceta == doctest::Approx(bias).epsilon(1e-9));
}

TEST_CASE("untruncated rate is rejected for singular kernels") {
    KernelSpec spec = KernelSpec::pure(2, 0.5, 1.0);
    CHECK_THROWS(truncated_rate(spec, 0.0));
}

TEST_CASE("automatic truncation hits the bias target") {
    KernelSpec spec = KernelSpec::pure(2, 0.5, 1.0);
    double target = 0.05;
    double eta = auto_truncation(spec, target);
    CHECK(truncation_bias_bound(spec, eta) <= target * (1.0 + 1e-6));
    // closed form: bias = 4 pi sqrt(eta) -> eta = (target / 4pi)^2
    CHECK(eta == doctest::Approx(std::pow(target / (4.0 * kPi), 2)).epsilon(1e-3));
}

TEST_CASE("mollified kernels converge to the pure kernel") {
    KernelSpec base = KernelSpec::pure(2, 0.5, 1.0);
    double c_ref = mathfrak_c(base);
    double prev = 1e300;
    for (double n : {1e2, 1e4, 1e6}) {
        KernelSpec mol = KernelSpec::mollified(base, n);
        CHECK(!mol.singular_at_one());
        double err = std::abs(mathfrak_c(mol) - c_ref);
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev <= 2e-3 * c_ref);
}

TEST_CASE("pure-power peak profile reproduces the pure kernel at every scale") {
    auto power = [](double) { return 1.0; };  // k_smooth(t) = a1 * 1
    double c_ref = mathfrak_c(KernelSpec::pure(2, 0.5, 1.0));
    for (double eps : {1.0, 0.25, 0.03125}) {
        KernelSpec pk = KernelSpec::peaked(2, 0.5, 1.0, eps, power);
        CHECK(mathfrak_c(pk) == doctest::Approx(c_ref).epsilon(1e-11));
    }
}

TEST_CASE("default peak profile approaches the pure kernel as eps shrinks") {
    double c_ref = mathfrak_c(KernelSpec::pure(2, 0.5, 1.0));
    double prev = 1e300;
    for (double eps : {0.5, 0.25, 0.125}) {
        double err = std::abs(mathfrak_c(KernelSpec::peaked(2, 0.5, 1.0, eps)) -
                              c_ref);
        CHECK(err < prev);
        prev = err;
    }
}

TEST_CASE("smooth-plus-singular evaluation matches its pieces") {
    auto f1 = [](double s) { return 0.25 * (1.0 + s) * (1.0 + s); };
    auto a2 = [](double s) { return 0.3 * std::cos(3.0 * s); };
    KernelSpec spec = KernelSpec::smooth_plus_singular(2, 0.5, 1.0, f1, a2, 0.3);
    // below delta the cutoff keeps only the bounded part
    CHECK(eval(spec, 0.0) == doctest::Approx(f1(0.0)).epsilon(1e-14));
    // beyond delta_prime the singular part is fully switched on
    double s = 0.9;
    double expected = f1(s) + (1.0 + a2(s)) * std::pow(1.0 - s, -1.5);
    CHECK(eval(spec, s) == doctest::Approx(expected).epsilon(1e-13));
    CHECK(spec.cutoff_chi(spec.delta - 1e-9) == doctest::Approx(1.0));
    CHECK(spec.cutoff_chi(spec.delta_prime + 1e-9) == doctest::Approx(0.0));
}

TEST_CASE("kernel moments are additive across the truncation point") {
    KernelSpec spec = KernelSpec::pure(3, 0.3, 0.7);
    auto h = [](double s) { return 1.0 + 0.5 * s; };
    double eta = 0.02;
    double full = kernel_moment(spec, h, 1.0);
    double head = kernel_moment(spec, h, 1.0, 1.0 - eta);
    double tail = kernel_tail_moment(spec, h, 1.0, eta);
    CHECK(head + tail == doctest::Approx(full).epsilon(1e-10));
}

TEST_CASE("invalid kernel parameters are rejected with diagnostics") {
    CHECK_THROWS(KernelSpec::pure(2, 1.5, 1.0).validate());
    CHECK_THROWS(KernelSpec::pure(2, 0.0, 1.0).validate());
    CHECK_THROWS(KernelSpec::pure(0, 0.5, 1.0).validate());
    CHECK_THROWS(KernelSpec::pure(2, 0.5, -1.0).validate());
    auto f1 = [](double) { return 1.0; };
    auto a2 = [](double) { return 1.5; };
    CHECK_THROWS(
        KernelSpec::smooth_plus_singular(2, 0.5, 1.0, f1, a2, 1.5).validate());
}

TEST_CASE("unit-c normalization") {
    for (int d : {1, 2, 3}) {
        for (double beta : {0.3, 0.7}) {
            double a1 = KernelSpec::a1_for_unit_c(d, beta);
            CHECK(mathfrak_c(KernelSpec::pure(d, beta, a1)) ==
                  doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("diffusion matrix is isotropic with the closed-form diagonal") {
    KernelSpec spec = KernelSpec::pure(2, 0.5, KernelSpec::a1_for_unit_c(2, 0.5));
    double diag = diffusion_matrix_diagonal(spec);
    CHECK(diag == doctest::Approx(1.0 / 3.0).epsilon(1e-11));
    auto m = diffusion_matrix(spec);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(m[i][j] == doctest::Approx(i == j ? diag : 0.0));
}
