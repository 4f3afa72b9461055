#pragma once

#include <memory>
#include <vector>

#include "sphjump/kernel.hpp"
#include "sphjump/rng.hpp"
#include "sphjump/sphere.hpp"

namespace sphjump {

struct ProcessConfig {
    KernelSpec kernel;
    double eta = 1e-4;   // cosine truncation, s <= 1 - eta (0 only for bounded kernels)
    double t_max = 1.0;
    std::vector<double> x0;  // position in R^{d+1}; defaults to the origin
    UnitVector k0 = UnitVector::pole(2);
    std::uint64_t seed = 0;
    std::uint64_t path_index = 0;
};

// Samples the jump cosine with density proportional to
// F(s)(1-s^2)^{(d-2)/2} on [-1, 1-eta]. Mixture of a tabulated-CDF smooth
// component on [-1, delta'] (monotone-cubic inversion on a theta grid) and a
// power-law envelope with rejection on [delta', 1-eta].
class CosineSampler {
  public:
    CosineSampler(const KernelSpec& spec, double eta);

    double sample(RngStream& rng);

    double total_rate() const { return total_rate_; }        // Lambda(eta)
    double smooth_rate() const { return smooth_rate_; }
    double singular_rate() const { return singular_rate_; }

    long long proposals() const { return proposals_; }
    long long accepts() const { return accepts_; }
    double acceptance_rate() const {
        return proposals_ > 0 ? static_cast<double>(accepts_) / proposals_ : 1.0;
    }

  private:
    double sample_smooth(RngStream& rng) const;
    double sample_singular(RngStream& rng);

    KernelSpec spec_;
    double eta_ = 0.0;
    double band_lo_ = 0.0;   // delta' (or the full range collapses into the table)
    double band_hi_ = 0.0;   // 1 - eta
    double smooth_rate_ = 0.0;
    double singular_rate_ = 0.0;
    double total_rate_ = 0.0;

    // smooth component: inverse-CDF table s(q) on a theta grid
    struct CdfTable {
        std::vector<double> q;      // cumulative fractions in [0,1], increasing
        std::vector<double> s;      // cosines, decreasing in theta -> stored by q
        std::vector<double> slope;  // ds/dq at the nodes (monotone cubic)
    };
    std::shared_ptr<const CdfTable> table_;

    // singular band envelope: density prop. to (1 - s + c_env)^{-beta-1}
    double env_shift_ = 0.0;
    double env_scale_ = 0.0;    // sup of true density * (1-s+c_env)^{beta+1}
    double env_wlo_ = 0.0;      // (1 - band_hi + c_env)^{-beta}
    double env_whi_ = 0.0;      // (1 - band_lo + c_env)^{-beta}

    long long proposals_ = 0;
    long long accepts_ = 0;
};

// One realization of the truncated jump process on [0, t_max].
// Positions are exact: x(t) = x0 - speed * sum_i k_i * |[t_i, t_{i+1}] cap [0,t]|.
struct Trajectory {
    double t_max = 0.0;
    double time_scale = 1.0;  // event times are stored pre-multiplied by this
    double speed = 1.0;
    std::vector<double> x0;
    std::vector<double> jump_times;       // strictly increasing, in (0, t_max]
    std::vector<UnitVector> momenta;      // momenta[0] = k0; momenta[i] after jump i
    long long jump_count = 0;

    const UnitVector& momentum(double t) const;
    std::vector<double> position(double t) const;
};

// Exact-in-time simulation: exponential holding times at rate Lambda(eta),
// cosines from the sampler, azimuths uniform on the tangent sphere.
Trajectory simulate(const ProcessConfig& config, CosineSampler& sampler,
                    RngStream& rng);
Trajectory simulate(const ProcessConfig& config);

// Diffusive rescaling Y^eps(t) = x0 - eps * int_0^{t/eps^2} m(u) du on [0, t_max].
Trajectory diffusive_path(const ProcessConfig& config, CosineSampler& sampler,
                          RngStream& rng, double epsilon);
Trajectory diffusive_path(const ProcessConfig& config, double epsilon);

// Peaked-forward process: plain simulation under a Peaked kernel.
Trajectory peaked_path(const ProcessConfig& config, double epsilon);

}  // namespace sphjump
