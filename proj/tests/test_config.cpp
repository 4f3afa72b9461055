#include <stdexcept>
#include <string>

#include "doctest.h"
#include "sphjump/config.hpp"

using namespace sphjump;

TEST_CASE("beta outside (0,1) is rejected with the admissible range named") {
    RunConfig cfg;
    cfg.beta = 1.5;
    try {
        cfg.validate();
        FAIL("expected a validation error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("(0, 1)") != std::string::npos);
    }
}

TEST_CASE("invalid fields produce diagnostics") {
    RunConfig cfg;
    cfg.family = "zigzag";
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = RunConfig{};
    cfg.n_paths = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = RunConfig{};
    cfg.eta = 2.5;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = RunConfig{};
    cfg.d = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = RunConfig{};
    cfg.eps_list = {0.5, 2.0};
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("defaults resolve to the documented values") {
    RunConfig cfg;
    cfg.validate();
    KernelSpec spec = cfg.kernel_spec();
    CHECK(spec.a1 == KernelSpec::a1_for_unit_c(2, 0.5));
    CHECK(mathfrak_c(spec) == doctest::Approx(1.0).epsilon(1e-12));
    double eta = cfg.resolved_eta(spec);
    CHECK(eta > 0.0);
    CHECK(truncation_bias_bound(spec, eta) <=
          cfg.bias_target * mathfrak_c(spec) * (1.0 + 1e-6));
    CHECK(cfg.resolved_t_grid() == std::vector<double>{0.25, 0.5, 1.0, 2.0});
    CHECK(cfg.resolved_eps_list() == std::vector<double>{0.4, 0.2, 0.1});
    CHECK(cfg.resolved_t_large(spec) == doctest::Approx(10.0));
    CHECK(cfg.resolved_workers() >= 1);
}

TEST_CASE("explicit values override defaults") {
    RunConfig cfg;
    cfg.a1 = 2.0;
    cfg.eta = 1e-3;
    cfg.n_workers = 3;
    cfg.t_grid = {0.1, 0.2};
    cfg.validate();
    KernelSpec spec = cfg.kernel_spec();
    CHECK(spec.a1 == 2.0);
    CHECK(cfg.resolved_eta(spec) == 1e-3);
    CHECK(cfg.resolved_workers() == 3);
    CHECK(cfg.resolved_t_grid() == std::vector<double>{0.1, 0.2});
}

TEST_CASE("fingerprint is stable and sensitive") {
    RunConfig a, b;
    CHECK(a.fingerprint() == b.fingerprint());
    b.beta = 0.7;
    CHECK(a.fingerprint() != b.fingerprint());
    // worker count must not affect the fingerprint (byte-identical outputs)
    RunConfig c;
    c.n_workers = 7;
    CHECK(a.fingerprint() == c.fingerprint());
}

TEST_CASE("every documented family constructs a valid kernel") {
    for (const char* fam :
         {"pure", "smooth_plus_singular", "mollified", "peaked"}) {
        RunConfig cfg;
        cfg.family = fam;
        KernelSpec spec = cfg.kernel_spec();
        spec.validate();
        CHECK(mathfrak_c(spec) > 0.0);
    }
}
