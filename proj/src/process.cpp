#include "sphjump/process.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sphjump/common.hpp"

namespace sphjump {

namespace {

constexpr int kTableSize = 1024;
constexpr double kEnvelopeSafety = 1.01;
constexpr double kJumpBudget = 1e9;

double angular_density_raw(const KernelSpec& spec, double s) {
    // without the sigma(S^{d-1}) factor; only relative weights matter here
    return eval(spec, s) * std::pow(1.0 - s * s, 0.5 * (spec.d - 2));
}

}  // namespace

CosineSampler::CosineSampler(const KernelSpec& spec, double eta)
    : spec_(spec), eta_(eta) {
    spec_.validate();
    if (spec_.singular_at_one() && !(eta > 0.0))
        throw std::invalid_argument(
            "CosineSampler: singular kernel requires eta > 0 (infinite jump rate)");
    if (spec_.family == KernelFamily::Mollified && spec_.d == 1 && !(eta > 0.0))
        throw std::invalid_argument(
            "CosineSampler: d=1 mollified sampling requires eta > 0");
    if (!(eta >= 0.0 && eta < 2.0))
        throw std::invalid_argument("CosineSampler: eta must lie in [0,2)");

    band_hi_ = 1.0 - eta;
    const bool bounded_tail =
        !spec_.singular_at_one() && spec_.family != KernelFamily::Mollified;
    band_lo_ = bounded_tail ? band_hi_ : std::min(spec_.delta_prime, band_hi_);

    total_rate_ = truncated_rate(spec_, eta);
    if (!(total_rate_ > 0.0))
        throw std::invalid_argument("CosineSampler: total jump rate is not positive");
    smooth_rate_ = band_lo_ > -1.0
                       ? kernel_moment(spec_, [](double) { return 1.0; }, 0.0, band_lo_)
                       : 0.0;
    singular_rate_ = total_rate_ - smooth_rate_;

    // --- smooth component: CDF table on a theta grid ---
    if (band_lo_ > -1.0) {
        auto table = std::make_shared<CdfTable>();
        const double th_lo = std::acos(std::min(band_lo_, 1.0));
        const double th_hi = kPi;
        auto density_theta = [&](double th) {
            return eval(spec_, std::cos(th)) * std::pow(std::sin(th), spec_.d - 1);
        };
        std::vector<double> cum(kTableSize + 1, 0.0);
        const QuadRule& cell = gauss_legendre(16);
        for (int i = 0; i < kTableSize; ++i) {
            double a = th_lo + (th_hi - th_lo) * i / kTableSize;
            double b = th_lo + (th_hi - th_lo) * (i + 1) / kTableSize;
            double half = 0.5 * (b - a), mid = 0.5 * (a + b);
            double v = 0.0;
            for (int j = 0; j < 16; ++j)
                v += cell.weights[j] * density_theta(mid + half * cell.nodes[j]);
            cum[i + 1] = cum[i] + half * v;
        }
        const double mass = cum.back();
        if (!(mass > 0.0))
            throw std::invalid_argument("CosineSampler: smooth component has zero mass");
        table->q.resize(kTableSize + 1);
        table->s.resize(kTableSize + 1);
        table->slope.resize(kTableSize + 1);
        for (int i = 0; i <= kTableSize; ++i) {
            double th = th_lo + (th_hi - th_lo) * i / kTableSize;
            table->q[i] = cum[i] / mass;
            table->s[i] = std::cos(th);
            double w = density_theta(th);
            // ds/dq = -sin(theta) * mass / w(theta); fall back to secants
            // where the density vanishes.
            table->slope[i] = w > 1e-300 ? -std::sin(th) * mass / w : 0.0;
        }
        // monotone clamp (Fritsch-Carlson style): |m| <= 3 |secant|
        for (int i = 0; i <= kTableSize; ++i) {
            double sec_l = i > 0 ? (table->s[i] - table->s[i - 1]) /
                                       std::max(table->q[i] - table->q[i - 1], 1e-300)
                                 : 0.0;
            double sec_r = i < kTableSize
                               ? (table->s[i + 1] - table->s[i]) /
                                     std::max(table->q[i + 1] - table->q[i], 1e-300)
                               : 0.0;
            double lim = 3.0 * std::min(std::abs(sec_l) + (i == 0 ? 1e300 : 0.0),
                                        std::abs(sec_r) + (i == kTableSize ? 1e300 : 0.0));
            if (std::abs(table->slope[i]) > lim)
                table->slope[i] = table->slope[i] < 0.0 ? -lim : lim;
            if (table->slope[i] > 0.0) table->slope[i] = 0.0;  // s decreases in q
        }
        table_ = std::move(table);
    }

    // --- singular band envelope ---
    if (band_hi_ > band_lo_) {
        env_shift_ = (spec_.family == KernelFamily::Mollified && spec_.d >= 2)
                         ? 1.0 / spec_.mollify_n
                         : 0.0;
        const double bp1 = spec_.beta + 1.0;
        double sup = 0.0;
        auto probe = [&](double s) {
            if (s < band_lo_ || s > band_hi_) return;
            if (s >= 1.0) s = band_hi_;  // guard: density is evaluated on [-1,1)
            double g = angular_density_raw(spec_, s) *
                       std::pow(1.0 - s + env_shift_, bp1);
            if (std::isfinite(g)) sup = std::max(sup, g);
        };
        for (int i = 0; i <= 8192; ++i)
            probe(band_lo_ + (band_hi_ - band_lo_) * i / 8192.0);
        for (int j = 1; j < 60; ++j) probe(1.0 - std::ldexp(1.0, -j));
        if (!(sup > 0.0))
            throw std::invalid_argument(
                "CosineSampler: singular band has zero density");
        env_scale_ = sup * kEnvelopeSafety;
        env_wlo_ = std::pow(1.0 - band_lo_ + env_shift_, -spec_.beta);
        env_whi_ = std::pow(1.0 - band_hi_ + env_shift_, -spec_.beta);
    }
}

double CosineSampler::sample_smooth(RngStream& rng) const {
    const CdfTable& t = *table_;
    double q = rng.uniform();
    auto it = std::upper_bound(t.q.begin(), t.q.end(), q);
    std::size_t i = std::min<std::size_t>(
        t.q.size() - 2, it == t.q.begin() ? 0 : (it - t.q.begin()) - 1);
    double h = t.q[i + 1] - t.q[i];
    if (h <= 0.0) return t.s[i];
    double u = (q - t.q[i]) / h;
    double u2 = u * u, u3 = u2 * u;
    double s = (2 * u3 - 3 * u2 + 1) * t.s[i] + (u3 - 2 * u2 + u) * h * t.slope[i] +
               (-2 * u3 + 3 * u2) * t.s[i + 1] + (u3 - u2) * h * t.slope[i + 1];
    return std::clamp(s, -1.0, band_lo_);
}

double CosineSampler::sample_singular(RngStream& rng) {
    const double inv_beta = 1.0 / spec_.beta;
    for (int tries = 0; tries < 1000000; ++tries) {
        ++proposals_;
        double t = env_wlo_ + rng.uniform() * (env_whi_ - env_wlo_);
        double s = 1.0 + env_shift_ - std::pow(t, -inv_beta);
        s = std::clamp(s, band_lo_, band_hi_);
        double env = env_scale_ * std::pow(1.0 - s + env_shift_, -spec_.beta - 1.0);
        double w = angular_density_raw(spec_, s);
        if (w > env * (1.0 + 1e-9))
            throw std::runtime_error(
                "CosineSampler: envelope violation (mis-specified kernel bounds)");
        if (rng.uniform() * env <= w) {
            ++accepts_;
            return s;
        }
    }
    throw std::runtime_error("CosineSampler: rejection loop failed to accept");
}

double CosineSampler::sample(RngStream& rng) {
    if (band_hi_ <= band_lo_) return sample_smooth(rng);
    if (!table_) return sample_singular(rng);
    double u = rng.uniform() * total_rate_;
    return u < smooth_rate_ ? sample_smooth(rng) : sample_singular(rng);
}

const UnitVector& Trajectory::momentum(double t) const {
    auto it = std::upper_bound(jump_times.begin(), jump_times.end(), t);
    return momenta[it - jump_times.begin()];
}

std::vector<double> Trajectory::position(double t) const {
    t = std::min(t, t_max);
    std::vector<double> x = x0;
    double prev = 0.0;
    for (std::size_t i = 0; i <= jump_times.size() && prev < t; ++i) {
        double next = i < jump_times.size() ? jump_times[i] : t_max;
        double overlap = std::min(next, t) - prev;
        if (overlap > 0.0)
            for (std::size_t j = 0; j < x.size(); ++j)
                x[j] -= speed * overlap * momenta[i][j];
        prev = next;
    }
    return x;
}

Trajectory simulate(const ProcessConfig& config, CosineSampler& sampler,
                    RngStream& rng) {
    if (!(config.t_max >= 0.0))
        throw std::invalid_argument("simulate: t_max must be nonnegative");
    if (config.k0.dim() != config.kernel.d)
        throw std::invalid_argument("simulate: k0 dimension does not match kernel");
    const double rate = sampler.total_rate();
    if (rate * config.t_max > kJumpBudget)
        throw std::runtime_error(
            "simulate: expected jump count exceeds 1e9; raise eta");

    Trajectory traj;
    traj.t_max = config.t_max;
    traj.x0 = config.x0.empty() ? std::vector<double>(config.kernel.d + 1, 0.0)
                                : config.x0;
    if (traj.x0.size() != static_cast<std::size_t>(config.kernel.d + 1))
        throw std::invalid_argument("simulate: x0 dimension does not match kernel");
    traj.momenta.push_back(config.k0);

    double t = 0.0;
    UnitVector k = config.k0;
    while (true) {
        t += rng.exponential(rate);
        if (t > config.t_max) break;
        double s = sampler.sample(rng);
        UnitVector u = tangent_direction(k, rng);
        k = jump(k, s, u);
        traj.jump_times.push_back(t);
        traj.momenta.push_back(k);
        ++traj.jump_count;
    }
    return traj;
}

Trajectory simulate(const ProcessConfig& config) {
    CosineSampler sampler(config.kernel, config.eta);
    RngStream rng(config.seed, config.path_index);
    return simulate(config, sampler, rng);
}

Trajectory diffusive_path(const ProcessConfig& config, CosineSampler& sampler,
                          RngStream& rng, double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 1.0))
        throw std::invalid_argument("diffusive_path: epsilon must lie in (0,1]");
    ProcessConfig scaled = config;
    scaled.t_max = config.t_max / (epsilon * epsilon);
    Trajectory traj = simulate(scaled, sampler, rng);
    traj.time_scale = epsilon * epsilon;
    traj.t_max = config.t_max;
    for (double& t : traj.jump_times) t *= epsilon * epsilon;
    traj.speed = 1.0 / epsilon;
    return traj;
}

Trajectory diffusive_path(const ProcessConfig& config, double epsilon) {
    CosineSampler sampler(config.kernel, config.eta);
    RngStream rng(config.seed, config.path_index);
    return diffusive_path(config, sampler, rng, epsilon);
}

Trajectory peaked_path(const ProcessConfig& config, double epsilon) {
    if (config.kernel.family != KernelFamily::Peaked)
        throw std::invalid_argument("peaked_path: kernel family must be Peaked");
    ProcessConfig scaled = config;
    scaled.kernel.eps = epsilon;
    return simulate(scaled);
}

}  // namespace sphjump
