#include <cmath>

#include "doctest.h"
#include "sphjump/common.hpp"
#include "sphjump/quadrature.hpp"

using namespace sphjump;

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
    const QuadRule& r = gauss_legendre(8);
    double m0 = 0, m4 = 0, m14 = 0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        m0 += r.weights[i];
        m4 += r.weights[i] * std::pow(r.nodes[i], 4);
        m14 += r.weights[i] * std::pow(r.nodes[i], 14);
    }
    CHECK(m0 == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(m4 == doctest::Approx(2.0 / 5.0).epsilon(1e-14));
    CHECK(m14 == doctest::Approx(2.0 / 15.0).epsilon(1e-13));
}

TEST_CASE("Gauss-Jacobi total mass equals the Beta-function moment") {
    // integral of (1-x)^a (1+x)^b over [-1,1] = 2^{a+b+1} B(a+1, b+1)
    for (double a : {-0.5, 0.0, 0.7}) {
        for (double b : {-0.3, 0.0, 1.5}) {
            const QuadRule& r = gauss_jacobi(12, a, b);
            double m0 = 0, m1 = 0;
            for (std::size_t i = 0; i < r.nodes.size(); ++i) {
                m0 += r.weights[i];
                m1 += r.weights[i] * r.nodes[i];
            }
            double mass = std::pow(2.0, a + b + 1.0) * beta_function(a + 1, b + 1);
            // first moment: mass * (b - a) / (a + b + 2)
            CHECK(m0 == doctest::Approx(mass).epsilon(1e-12));
            CHECK(m1 == doctest::Approx(mass * (b - a) / (a + b + 2.0))
                            .epsilon(1e-12));
        }
    }
}

TEST_CASE("adaptive Gauss integrates a smooth function") {
    double v = integrate_adaptive([](double s) { return std::exp(s); }, -1.0, 1.0);
    CHECK(v == doctest::Approx(std::exp(1.0) - std::exp(-1.0)).epsilon(1e-12));
}

TEST_CASE("right-weighted quadrature handles an endpoint power") {
    // integral over [0,1] of s (1-s)^{-1/2} ds = B(2, 1/2) = 4/3
    double v = integrate_right_weighted([](double s) { return s; }, 0.0, 1.0, -0.5);
    CHECK(v == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    // integral over [0,1] of (1-s)^{0.3} ds = 1 / 1.3
    double w = integrate_right_weighted([](double) { return 1.0; }, 0.0, 1.0, 0.3);
    CHECK(w == doctest::Approx(1.0 / 1.3).epsilon(1e-12));
}

TEST_CASE("left-weighted quadrature handles an endpoint power") {
    // integral over [-1,1] of (1+s)^{-1/2} cos(s) ds
    // oracle via substitution u = sqrt(1+s): 2 int_0^{sqrt 2} cos(u^2-1) du
    double v = integrate_left_weighted([](double s) { return std::cos(s); }, -1.0,
                                       1.0, -0.5);
    double oracle = integrate_adaptive(
        [](double u) { return 2.0 * std::cos(u * u - 1.0); }, 0.0, std::sqrt(2.0));
    CHECK(v == doctest::Approx(oracle).epsilon(1e-11));
}

TEST_CASE("singular quadrature reproduces the pure-power closed form") {
    for (double alpha : {0.2, 0.5, 0.8}) {
        double v = quadrature_singular([](double) { return 1.0; }, alpha);
        double oracle = std::pow(2.0, 1.0 - alpha) / (1.0 - alpha);
        CHECK(v == doctest::Approx(oracle).epsilon(1e-11));
    }
}
