#include "sphjump/config.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "sphjump/common.hpp"

namespace sphjump {

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("config: " + msg);
}

}  // namespace

void RunConfig::validate() const {
    if (d < 1 || d > 16) fail("d = " + std::to_string(d) + "; sphere dimension d must lie in [1, 16]");
    if (!(beta > 0.0 && beta < 1.0))
        fail("beta = " + format_double(beta) + "; the kernel hypothesis requires beta in the open interval (0, 1)");
    if (a1 < 0.0) fail("a1 must be >= 0 (0 selects the unit-relaxation-rate normalization)");
    if (family != "pure" && family != "smooth_plus_singular" &&
        family != "mollified" && family != "peaked")
        fail("family '" + family + "' unknown; expected pure | smooth_plus_singular | mollified | peaked");
    if (family == "mollified" && !(mollify_n >= 1.0))
        fail("mollify_n must be >= 1");
    if (family == "peaked" && !(peak_eps > 0.0 && peak_eps <= 1.0))
        fail("peak_eps must lie in (0, 1]");
    if (eta < 0.0 || eta >= 2.0) fail("eta must lie in [0, 2); 0 selects automatic truncation");
    if (!(bias_target > 0.0 && bias_target < 1.0))
        fail("bias_target must lie in (0, 1)");
    if (!(t_max > 0.0)) fail("t_max must be > 0");
    if (n_paths < 1) fail("n_paths must be >= 1");
    if (n_workers < 0) fail("n_workers must be >= 0 (0 selects SPHJUMP_WORKERS or 1)");
    if (n_max < 1 || n_max > 4096) fail("n_max must lie in [1, 4096]");
    for (double t : t_grid)
        if (!(t >= 0.0)) fail("t_grid entries must be >= 0");
    for (double e : eps_list)
        if (!(e > 0.0 && e <= 1.0)) fail("eps_list entries must lie in (0, 1]");
    for (double u : u_grid)
        if (!(u >= 0.0)) fail("u_grid entries must be >= 0");
    if (t_large < 0.0) fail("t_large must be >= 0 (0 selects 10 / c)");
    if (out_dir.empty()) fail("out_dir must not be empty");
}

KernelSpec RunConfig::kernel_spec() const {
    validate();
    double a = a1 > 0.0 ? a1 : KernelSpec::a1_for_unit_c(d, beta);
    if (family == "pure") return KernelSpec::pure(d, beta, a);
    if (family == "smooth_plus_singular") {
        // built-in representative: bounded part (1+s)^2/4, 30% oscillatory
        // relative perturbation of the singular amplitude
        auto f1 = [](double s) { return 0.25 * (1.0 + s) * (1.0 + s); };
        auto a2 = [](double s) { return 0.3 * std::cos(3.0 * s); };
        return KernelSpec::smooth_plus_singular(d, beta, a, f1, a2, 0.3);
    }
    if (family == "mollified")
        return KernelSpec::mollified(KernelSpec::pure(d, beta, a), mollify_n);
    return KernelSpec::peaked(d, beta, a, peak_eps);
}

double RunConfig::resolved_eta(const KernelSpec& spec) const {
    if (eta > 0.0) return eta;
    if (!spec.singular_at_one() && spec.family != KernelFamily::Mollified)
        return 0.0;
    return auto_truncation(spec, bias_target * mathfrak_c(spec));
}

int RunConfig::resolved_workers() const {
    if (n_workers > 0) return n_workers;
    if (const char* env = std::getenv("SPHJUMP_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    return 1;
}

std::vector<double> RunConfig::resolved_t_grid() const {
    if (!t_grid.empty()) return t_grid;
    return {0.25, 0.5, 1.0, 2.0};
}

std::vector<double> RunConfig::resolved_eps_list() const {
    if (!eps_list.empty()) return eps_list;
    return {0.4, 0.2, 0.1};
}

std::vector<double> RunConfig::resolved_u_grid() const {
    if (!u_grid.empty()) return u_grid;
    return {0.5, 1.0};
}

double RunConfig::resolved_t_large(const KernelSpec& spec) const {
    if (t_large > 0.0) return t_large;
    return 10.0 / mathfrak_c(spec);
}

std::string RunConfig::canonical_string() const {
    std::ostringstream s;
    s << "d=" << d << ";beta=" << format_double(beta) << ";a1=" << format_double(a1)
      << ";family=" << family << ";mollify_n=" << format_double(mollify_n)
      << ";peak_eps=" << format_double(peak_eps) << ";eta=" << format_double(eta)
      << ";bias_target=" << format_double(bias_target)
      << ";t_max=" << format_double(t_max) << ";n_paths=" << n_paths
      << ";seed=" << seed << ";n_max=" << n_max << ";t_large="
      << format_double(t_large) << ";t_grid=";
    for (double t : t_grid) s << format_double(t) << " ";
    s << ";eps_list=";
    for (double e : eps_list) s << format_double(e) << " ";
    s << ";u_grid=";
    for (double u : u_grid) s << format_double(u) << " ";
    return s.str();  // worker count and out_dir deliberately excluded
}

std::uint64_t RunConfig::fingerprint() const { return fnv1a(canonical_string()); }

}  // namespace sphjump
