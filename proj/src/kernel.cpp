#include "sphjump/kernel.hpp"

#include <cmath>
#include <stdexcept>

#include "sphjump/common.hpp"

namespace sphjump {

namespace {

double smoothstep_bump(double y) { return y > 0.0 ? std::exp(-1.0 / y) : 0.0; }

double zero_fn(double) { return 0.0; }

}  // namespace

KernelSpec KernelSpec::pure(int d, double beta, double a1) {
    KernelSpec k;
    k.d = d;
    k.beta = beta;
    k.a1 = a1;
    k.family = KernelFamily::Pure;
    k.validate();
    return k;
}

KernelSpec KernelSpec::smooth_plus_singular(int d, double beta, double a1,
                                            std::function<double(double)> f1,
                                            std::function<double(double)> a2,
                                            double a2_sup, double delta,
                                            double delta_prime) {
    KernelSpec k;
    k.d = d;
    k.beta = beta;
    k.a1 = a1;
    k.family = KernelFamily::SmoothPlusSingular;
    k.smooth_part = f1 ? std::move(f1) : zero_fn;
    k.perturbation = a2 ? std::move(a2) : zero_fn;
    k.perturbation_sup = a2_sup;
    k.delta = delta;
    k.delta_prime = delta_prime;
    k.validate();
    return k;
}

KernelSpec KernelSpec::mollified(const KernelSpec& base, double n) {
    KernelSpec k = base;
    k.family = KernelFamily::Mollified;
    k.mollify_n = n;
    // A Pure base has no smooth part and no cutoff; regularizing it must not
    // introduce one, so keep chi identically zero.
    k.mollified_pure = base.family == KernelFamily::Pure;
    if (!k.smooth_part) k.smooth_part = zero_fn;
    if (!k.perturbation) k.perturbation = zero_fn;
    k.validate();
    return k;
}

KernelSpec KernelSpec::peaked(int d, double beta, double a1, double eps,
                              std::function<double(double)> k_smooth) {
    KernelSpec k;
    k.d = d;
    k.beta = beta;
    k.a1 = a1;
    k.family = KernelFamily::Peaked;
    k.eps = eps;
    if (k_smooth)
        k.peak_smooth = std::move(k_smooth);
    else
        k.peak_smooth = [a1](double t) { return a1 * std::exp(-t); };
    k.validate();
    return k;
}

double KernelSpec::a1_for_unit_c(int d, double beta) {
    return 1.0 / mathfrak_c_pure_closed_form(d, beta, 1.0);
}

bool KernelSpec::singular_at_one() const {
    switch (family) {
        case KernelFamily::Pure:
        case KernelFamily::Peaked:
            return true;
        case KernelFamily::SmoothPlusSingular:
            return a1 > 0.0;
        case KernelFamily::Mollified:
            return false;
    }
    return true;
}

double KernelSpec::cutoff_chi(double s) const {
    if (family == KernelFamily::Pure || family == KernelFamily::Peaked) return 0.0;
    if (family == KernelFamily::Mollified && mollified_pure) return 0.0;
    if (s <= delta) return 1.0;
    if (s >= delta_prime) return 0.0;
    double x = (s - delta) / (delta_prime - delta);
    double up = smoothstep_bump(1.0 - x);
    return up / (up + smoothstep_bump(x));
}

double KernelSpec::singular_smooth_factor(double s) const {
    const double power = beta + 0.5 * d;
    switch (family) {
        case KernelFamily::Pure:
            return a1;
        case KernelFamily::Peaked:
            return peak_smooth(eps * (1.0 - s));
        case KernelFamily::SmoothPlusSingular: {
            double v = (1.0 - cutoff_chi(s)) * a1 * (1.0 + perturbation(s));
            if (smooth_part) v += smooth_part(s) * std::pow(1.0 - s, power);
            return v;
        }
        case KernelFamily::Mollified:
            throw std::logic_error("singular_smooth_factor: Mollified kernel is bounded");
    }
    return 0.0;
}

void KernelSpec::validate() const {
    if (d < 1) throw std::invalid_argument("KernelSpec: d must be >= 1");
    if (!(beta > 0.0 && beta < 1.0))
        throw std::invalid_argument("KernelSpec: beta must lie in (0,1)");
    if (!(a1 >= 0.0) || !std::isfinite(a1))
        throw std::invalid_argument("KernelSpec: a1 must be finite and >= 0");
    if ((family == KernelFamily::Pure || family == KernelFamily::Peaked) && !(a1 > 0.0))
        throw std::invalid_argument("KernelSpec: a1 must be positive for this family");
    if (family == KernelFamily::Mollified && !(mollify_n > 0.0))
        throw std::invalid_argument("KernelSpec: mollification index must be positive");
    if (family == KernelFamily::Peaked && !(eps > 0.0))
        throw std::invalid_argument("KernelSpec: eps must be positive");
    if (family == KernelFamily::SmoothPlusSingular || family == KernelFamily::Mollified) {
        if (!(delta > -1.0 && delta < delta_prime && delta_prime < 1.0))
            throw std::invalid_argument("KernelSpec: need -1 < delta < delta' < 1");
        if (!(perturbation_sup >= 0.0 && perturbation_sup < 1.0))
            throw std::invalid_argument("KernelSpec: sup|a2| must lie in [0,1)");
    }
}

double eval(const KernelSpec& spec, double s) {
    if (!(s >= -1.0 && s <= 1.0))
        throw std::domain_error("kernel eval: s outside [-1,1]");
    if (s == 1.0 && spec.singular_at_one())
        throw std::domain_error("kernel eval: kernel is singular at s=1");
    const double power = spec.beta + 0.5 * spec.d;
    switch (spec.family) {
        case KernelFamily::Pure:
            return spec.a1 * std::pow(1.0 - s, -power);
        case KernelFamily::Peaked:
            return spec.peak_smooth(spec.eps * (1.0 - s)) * std::pow(1.0 - s, -power);
        case KernelFamily::SmoothPlusSingular: {
            double v = spec.smooth_part ? spec.smooth_part(s) : 0.0;
            double c = spec.cutoff_chi(s);
            if (c < 1.0 && spec.a1 > 0.0)
                v += (1.0 - c) * spec.a1 * (1.0 + spec.perturbation(s)) *
                     std::pow(1.0 - s, -power);
            return v;
        }
        case KernelFamily::Mollified: {
            double v = spec.smooth_part ? spec.smooth_part(s) : 0.0;
            double c = spec.cutoff_chi(s);
            if (c < 1.0 && spec.a1 > 0.0)
                v += (1.0 - c) * spec.a1 * (1.0 + spec.perturbation(s)) *
                     std::pow(1.0 - s + 1.0 / spec.mollify_n, -power);
            return v;
        }
    }
    return 0.0;
}

double angular_density(const KernelSpec& spec, double s) {
    if (spec.d == 1 && (s == 1.0 || s == -1.0))
        throw std::domain_error("angular_density: (1-s^2)^{-1/2} singular at |s|=1");
    return eval(spec, s) * std::pow(1.0 - s * s, 0.5 * (spec.d - 2));
}

namespace {

// Integral of F h (1-s)^p (1-s^2)^{(d-2)/2} over [lo, hi] where the kernel is
// bounded on [lo, hi); only the surface-measure endpoints need weighting.
double bounded_piece(const KernelSpec& spec, const Integrand& h, double p,
                     double lo, double hi, bool touches_minus1, bool touches_plus1) {
    const double dw = 0.5 * (spec.d - 2);
    if (spec.d == 1) {
        // weight (1-s)^{-1/2} (1+s)^{-1/2}; pull out whichever endpoint is hit.
        if (touches_plus1 && touches_minus1)
            throw std::logic_error("bounded_piece: split the interval first");
        if (touches_minus1) {
            auto g = [&](double s) {
                return eval(spec, s) * h(s) * std::pow(1.0 - s, p - 0.5);
            };
            return integrate_left_weighted(g, lo, hi, -0.5);
        }
        if (touches_plus1) {
            auto g = [&](double s) {
                return eval(spec, s) * h(s) * std::pow(1.0 + s, -0.5) *
                       std::pow(1.0 - s, p);
            };
            return integrate_right_weighted(g, lo, hi, -0.5);
        }
        return integrate_adaptive([&](double s) {
            return eval(spec, s) * h(s) * std::pow(1.0 - s, p) /
                   std::sqrt(1.0 - s * s);
        }, lo, hi);
    }
    // For odd d the surface weight carries half-integer powers of (1 -+ s);
    // push the factor hitting an endpoint into a Jacobi weight so plain
    // Gauss-Legendre never sees an algebraic endpoint singularity.
    const bool half_integer = spec.d % 2 == 1;
    if (half_integer && touches_minus1 && touches_plus1)
        return bounded_piece(spec, h, p, lo, 0.5 * (lo + hi), true, false) +
               bounded_piece(spec, h, p, 0.5 * (lo + hi), hi, false, true);
    if (half_integer && touches_minus1) {
        auto g = [&](double s) {
            return eval(spec, s) * h(s) * std::pow(1.0 - s, p + dw);
        };
        return integrate_left_weighted(g, lo, hi, dw);
    }
    if (half_integer && touches_plus1) {
        auto g = [&](double s) {
            return eval(spec, s) * h(s) * std::pow(1.0 + s, dw);
        };
        return integrate_right_weighted(g, lo, hi, p + dw);
    }
    auto g = [&](double s) {
        return eval(spec, s) * h(s) * std::pow(1.0 - s, p) *
               std::pow(1.0 - s * s, dw);
    };
    return integrate_adaptive(g, lo, hi);
}

// Mollified kernels concentrate on the scale 1/n near s=1; integrate the
// right piece in v = log(1 - s + 1/n) so the peak is resolved.
double mollified_right_piece(const KernelSpec& spec, const Integrand& h, double p,
                             double lo, double hi) {
    const double c0 = 1.0 / spec.mollify_n;
    const double dw = 0.5 * (spec.d - 2);
    const double v_lo = std::log(1.0 - hi + c0);
    const double v_hi = std::log(1.0 - lo + c0);
    auto g = [&](double v) {
        double ev = std::exp(v);
        double s = std::min(1.0 - (ev - c0), 1.0);
        double one_minus_s = std::max(ev - c0, 0.0);
        double base = spec.smooth_part ? spec.smooth_part(s) : 0.0;
        double c = spec.cutoff_chi(s);
        if (c < 1.0 && spec.a1 > 0.0)
            base += (1.0 - c) * spec.a1 * (1.0 + spec.perturbation(s)) *
                    std::pow(ev, -(spec.beta + 0.5 * spec.d));
        return base * h(s) * std::pow(one_minus_s, p) *
               std::pow((1.0 + s) * one_minus_s, dw) * ev;
    };
    if (spec.d == 1) {
        // the (1-s)^{-1/2} surface weight needs p >= 1/2 for this route;
        // otherwise fall back to a sqrt substitution w = sqrt(1-s).
        if (p >= 0.5) return integrate_adaptive(g, v_lo, v_hi);
        auto gw = [&](double w) {
            double s = 1.0 - w * w;
            return 2.0 * eval(spec, s) * h(s) * std::pow(w, 2.0 * p) /
                   std::sqrt(1.0 + s);
        };
        double w_hi = std::sqrt(1.0 - lo);
        double w_mid = std::min(30.0 * std::sqrt(c0), 0.5 * w_hi);
        double w_lo = hi >= 1.0 ? 0.0 : std::sqrt(1.0 - hi);
        if (w_lo >= w_mid) return integrate_adaptive(gw, w_lo, w_hi);
        return integrate_adaptive(gw, w_lo, w_mid) +
               integrate_adaptive(gw, w_mid, w_hi);
    }
    return integrate_adaptive(g, v_lo, v_hi);
}

// Right piece for a singular family: smooth factor times (1-s)^{q},
// q = p - beta - 1 the net endpoint exponent.
double singular_right_piece(const KernelSpec& spec, const Integrand& h, double p,
                            double lo, double hi) {
    const double q = p - spec.beta - 1.0;
    const double dw = 0.5 * (spec.d - 2);
    auto smooth = [&](double s) {
        return spec.singular_smooth_factor(s) * h(s) * std::pow(1.0 + s, dw);
    };
    if (hi >= 1.0) {
        if (!(q > -1.0))
            throw std::domain_error(
                "kernel_moment: divergent integral (net exponent <= -1 at s=1)");
        return integrate_right_weighted(smooth, lo, 1.0, q);
    }
    // truncated: substitute v = log(1-s); the integrand is analytic in v.
    const double v_lo = std::log(1.0 - hi);
    const double v_hi = std::log(1.0 - lo);
    auto g = [&](double v) {
        double one_minus_s = std::exp(v);
        double s = 1.0 - one_minus_s;
        return smooth(s) * std::exp((q + 1.0) * v);
    };
    return integrate_adaptive(g, v_lo, v_hi);
}

}  // namespace

double kernel_moment(const KernelSpec& spec, const Integrand& h, double p,
                     double upper) {
    spec.validate();
    if (upper <= -1.0) return 0.0;
    if (upper > 1.0) throw std::domain_error("kernel_moment: upper > 1");
    const double split = std::min(spec.delta_prime, upper);
    double left = bounded_piece(spec, h, p, -1.0, split,
                                /*touches_minus1=*/true,
                                /*touches_plus1=*/false);
    double right = 0.0;
    if (upper > split) {
        if (spec.family == KernelFamily::Mollified)
            right = mollified_right_piece(spec, h, p, split, upper);
        else if (spec.singular_at_one())
            right = singular_right_piece(spec, h, p, split, upper);
        else
            right = bounded_piece(spec, h, p, split, upper, false, upper >= 1.0);
    }
    return azimuthal_area(spec.d) * (left + right);
}

double kernel_tail_moment(const KernelSpec& spec, const Integrand& h, double p,
                          double eta) {
    spec.validate();
    if (!(eta > 0.0 && eta < 2.0))
        throw std::domain_error("kernel_tail_moment: eta must lie in (0,2)");
    const double lo = 1.0 - eta;
    double v;
    if (spec.family == KernelFamily::Mollified)
        v = mollified_right_piece(spec, h, p, lo, 1.0);
    else if (spec.singular_at_one())
        v = singular_right_piece(spec, h, p, lo, 1.0);
    else
        v = bounded_piece(spec, h, p, lo, 1.0, false, true);
    return azimuthal_area(spec.d) * v;
}

namespace {
double one_fn(double) { return 1.0; }
}  // namespace

double mathfrak_c(const KernelSpec& spec) {
    return kernel_moment(spec, one_fn, 1.0);
}

double mathfrak_c_pure_closed_form(int d, double beta, double a1) {
    return a1 * azimuthal_area(d) * std::pow(2.0, 0.5 * d - beta) *
           beta_function(1.0 - beta, 0.5 * d);
}

double diffusion_matrix_diagonal(const KernelSpec& spec) {
    return 1.0 / (mathfrak_c(spec) * (spec.d + 1));
}

std::vector<std::vector<double>> diffusion_matrix(const KernelSpec& spec) {
    const int n = spec.d + 1;
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    const double v = diffusion_matrix_diagonal(spec);
    for (int i = 0; i < n; ++i) m[i][i] = v;
    return m;
}

double truncated_rate(const KernelSpec& spec, double eta) {
    if (eta >= 2.0) return 0.0;
    if (eta <= 0.0) {
        if (spec.singular_at_one())
            throw std::domain_error(
                "truncated_rate: total rate diverges for a singular kernel "
                "(zero mean free path); need eta > 0");
        eta = 0.0;
    }
    return kernel_moment(spec, one_fn, 0.0, 1.0 - eta);
}

double truncated_mean_rate(const KernelSpec& spec, double eta) {
    if (!(eta >= 0.0 && eta < 2.0))
        throw std::domain_error("truncated_mean_rate: eta must lie in [0,2)");
    if (eta == 0.0) return mathfrak_c(spec);
    return kernel_moment(spec, one_fn, 1.0, 1.0 - eta);
}

double truncation_bias_bound(const KernelSpec& spec, double eta) {
    if (!(eta > 0.0 && eta < 2.0))
        throw std::domain_error("truncation_bias_bound: eta must lie in (0,2)");
    return kernel_tail_moment(spec, one_fn, 1.0, eta);
}

double auto_truncation(const KernelSpec& spec, double target_bias,
                       double eta_min, double eta_max) {
    if (!(target_bias > 0.0))
        throw std::invalid_argument("auto_truncation: target bias must be positive");
    if (truncation_bias_bound(spec, eta_max) <= target_bias) return eta_max;
    double lo = std::log(eta_min), hi = std::log(eta_max);
    if (truncation_bias_bound(spec, eta_min) > target_bias) return eta_min;
    for (int i = 0; i < 80; ++i) {
        double mid = 0.5 * (lo + hi);
        if (truncation_bias_bound(spec, std::exp(mid)) <= target_bias)
            lo = mid;
        else
            hi = mid;
    }
    return std::exp(lo);
}

}  // namespace sphjump
