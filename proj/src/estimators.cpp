#include "sphjump/estimators.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "sphjump/quadrature.hpp"

namespace sphjump {

EstimatorResult mc_expectation(
    long long n_paths, int n_workers,
    const std::function<std::vector<double>(std::uint64_t path_index)>& path_fn,
    int n_batches) {
    if (n_paths <= 0) throw std::invalid_argument("mc_expectation: n_paths <= 0");
    if (n_workers < 1) throw std::invalid_argument("mc_expectation: n_workers < 1");
    n_batches = static_cast<int>(std::min<long long>(n_batches, n_paths));

    std::vector<std::vector<double>> values(n_paths);
    std::atomic<long long> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;

    auto worker = [&]() {
        constexpr long long chunk = 64;
        while (true) {
            long long begin = next.fetch_add(chunk);
            if (begin >= n_paths) return;
            long long end = std::min(begin + chunk, n_paths);
            for (long long i = begin; i < end; ++i) {
                try {
                    values[i] = path_fn(static_cast<std::uint64_t>(i));
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
            {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (first_error) return;
            }
        }
    };

    if (n_workers == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(n_workers);
        for (int w = 0; w < n_workers; ++w) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    const std::size_t dim = values[0].size();
    for (const auto& v : values)
        if (v.size() != dim)
            throw std::runtime_error("mc_expectation: inconsistent statistic size");

    EstimatorResult res;
    res.n_paths = n_paths;
    res.n_batches = n_batches;
    res.mean.assign(dim, 0.0);
    res.std_error.assign(dim, 0.0);

    // fixed-order reduction: batch partial sums in path-index order
    std::vector<std::vector<double>> batch_mean(n_batches,
                                                std::vector<double>(dim, 0.0));
    std::vector<long long> batch_count(n_batches, 0);
    for (long long i = 0; i < n_paths; ++i) {
        int b = static_cast<int>(i * n_batches / n_paths);
        for (std::size_t j = 0; j < dim; ++j) batch_mean[b][j] += values[i][j];
        ++batch_count[b];
    }
    for (int b = 0; b < n_batches; ++b)
        for (std::size_t j = 0; j < dim; ++j) batch_mean[b][j] /= batch_count[b];
    for (int b = 0; b < n_batches; ++b)
        for (std::size_t j = 0; j < dim; ++j)
            res.mean[j] += batch_mean[b][j] * batch_count[b];
    for (std::size_t j = 0; j < dim; ++j) res.mean[j] /= n_paths;
    if (n_batches > 1) {
        for (std::size_t j = 0; j < dim; ++j) {
            double var = 0.0;
            for (int b = 0; b < n_batches; ++b) {
                double dlt = batch_mean[b][j] - res.mean[j];
                var += dlt * dlt;
            }
            var /= (n_batches - 1.0);
            res.std_error[j] = std::sqrt(var / n_batches);
        }
    }
    res.batch_means = std::move(batch_mean);
    res.batch_counts = std::move(batch_count);
    return res;
}

double ZonalFunction::profile(double s) const {
    if (coeff.empty()) return 0.0;
    std::vector<double> g = gegenbauer_all(static_cast<int>(coeff.size()) - 1, d, s);
    double v = 0.0;
    for (std::size_t n = 0; n < coeff.size(); ++n) v += coeff[n] * g[n];
    return v;
}

double ZonalFunction::operator()(const UnitVector& k) const {
    return profile(axis.dot(k));
}

ZonalFunction project_zonal(int d, const std::function<double(double)>& profile,
                            const UnitVector& axis, int n_max) {
    if (d < 1 || n_max < 0)
        throw std::invalid_argument("project_zonal: bad arguments");
    ZonalFunction z;
    z.d = d;
    z.axis = axis;
    z.coeff.assign(n_max + 1, 0.0);
    std::vector<double> norms(n_max + 1, 0.0);
    const double a = 0.5 * (d - 2);
    const QuadRule& rule = gauss_jacobi(std::max(256, 2 * n_max + 32), a, a);
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        double s = rule.nodes[q], w = rule.weights[q];
        std::vector<double> g = gegenbauer_all(n_max, d, s);
        double f = profile(s);
        for (int n = 0; n <= n_max; ++n) {
            z.coeff[n] += w * f * g[n];
            norms[n] += w * g[n] * g[n];
        }
    }
    for (int n = 0; n <= n_max; ++n) z.coeff[n] /= norms[n];
    return z;
}

double apply_multipliers(const ZonalFunction& phi, const std::vector<double>& mu,
                         const UnitVector& k) {
    if (mu.size() < phi.coeff.size())
        throw std::invalid_argument("apply_multipliers: too few multipliers");
    if (phi.coeff.empty()) return 0.0;
    double s = phi.axis.dot(k);
    std::vector<double> g =
        gegenbauer_all(static_cast<int>(phi.coeff.size()) - 1, phi.d, s);
    double v = 0.0;
    for (std::size_t n = 0; n < phi.coeff.size(); ++n)
        v -= mu[n] * phi.coeff[n] * g[n];
    return v;
}

std::vector<double> generator_multipliers(const KernelSpec& spec, int n_max,
                                          double eta) {
    std::vector<double> mu(n_max + 1, 0.0);
    for (int n = 1; n <= n_max; ++n) mu[n] = funk_hecke_mu(spec, n, eta);
    return mu;
}

std::vector<double> peaked_limit_multipliers(int d, double beta, double a1,
                                             int n_max) {
    std::vector<double> mu(n_max + 1, 0.0);
    for (int n = 1; n <= n_max; ++n) mu[n] = peaked_mu(d, beta, a1, n);
    return mu;
}

}  // namespace sphjump
