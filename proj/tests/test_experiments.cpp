#include <cmath>

#include "doctest.h"
#include "sphjump/experiments.hpp"
#include "sphjump/spectral.hpp"

using namespace sphjump;

namespace {

KernelSpec unit_spec() {
    return KernelSpec::pure(2, 0.5, KernelSpec::a1_for_unit_c(2, 0.5));
}

}  // namespace

TEST_CASE("moment decay experiment passes and is worker-count invariant") {
    KernelSpec spec = unit_spec();
    McSettings mc;
    mc.n_paths = 4000;
    mc.seed = 1;
    mc.n_workers = 1;
    ExperimentReport r1 = moment_decay_experiment(spec, 1e-4, {1, 2}, {0.5, 1.0}, mc);
    CHECK(r1.pass);
    CHECK(r1.points.size() == 4);
    CHECK(r1.total_jumps > 0);
    mc.n_workers = 3;
    ExperimentReport r3 = moment_decay_experiment(spec, 1e-4, {1, 2}, {0.5, 1.0}, mc);
    CHECK(report_csv(r1) == report_csv(r3));
    CHECK(report_json(r1) == report_json(r3));
}

TEST_CASE("moment decay at t = 0 is exactly 1") {
    KernelSpec spec = unit_spec();
    McSettings mc;
    mc.n_paths = 50;
    mc.seed = 2;
    ExperimentReport r = moment_decay_experiment(spec, 1e-3, {1}, {0.0}, mc);
    CHECK(r.points[0].estimate == 1.0);
    CHECK(r.points[0].oracle == 1.0);
}

TEST_CASE("pure-power peak profile gives identically zero generator distance") {
    auto power = [](double) { return 1.0; };
    ExperimentReport r = generator_convergence_experiment(
        2, 0.5, 1.0, power, {0.5, 0.25, 0.125}, {1, 2, 3}, 50, 0);
    CHECK(r.pass);
    for (const auto& p : r.points)
        if (p.label.rfind("trend", 0) != 0) CHECK(p.estimate <= 1e-10);
}

TEST_CASE("default peak profile converges strictly") {
    ExperimentReport r = generator_convergence_experiment(
        2, 0.5, 1.0, nullptr, {0.5, 0.25, 0.125}, {1, 2}, 50, 0);
    CHECK(r.pass);
}

TEST_CASE("reports serialize deterministically with round-trip numbers") {
    ExperimentReport r;
    r.name = "demo";
    r.params = {{"alpha", "0.5"}};
    ExperimentPoint p;
    p.label = "point";
    p.x = 0.1;
    p.estimate = 1.0 / 3.0;
    p.std_error = 0.01;
    p.oracle = 0.3333333333333333;
    p.oracle_kind = "closed-form";
    p.pass = true;
    r.points.push_back(p);
    r.pass = true;
    std::string csv = report_csv(r);
    CHECK(csv.find("label,x,estimate,std_error,oracle,oracle_kind,pass") !=
          std::string::npos);
    CHECK(csv.find("0.3333333333333333") != std::string::npos);
    CHECK(report_csv(r) == csv);
    std::string js = report_json(r);
    CHECK(js.find("\"pass\": true") != std::string::npos);
    // wall-clock must never leak into serialized artifacts
    ExperimentReport r2 = r;
    r2.wall_seconds = 99.0;
    CHECK(report_csv(r2) == csv);
    CHECK(report_json(r2) == js);
}

TEST_CASE("truncation bias exponent fit matches 1 - beta") {
    KernelSpec spec = unit_spec();
    McSettings mc;
    mc.n_paths = 400;
    mc.seed = 3;
    mc.n_workers = 2;
    ExperimentReport r = truncation_robustness_experiment(
        spec, 1e-3, 0.4, 1.0, {1e-2, 1e-3, 1e-4, 1e-5}, 0.15, mc);
    CHECK(r.pass);
    bool found = false;
    for (const auto& p : r.points)
        if (p.label == "fitted_exponent") {
            found = true;
            CHECK(std::abs(p.estimate - 0.5) <= 0.15);
        }
    CHECK(found);
}
