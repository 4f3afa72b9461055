#include "sphjump/sphere.hpp"

#include <cmath>
#include <stdexcept>

namespace sphjump {

UnitVector::UnitVector(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2)
        throw std::invalid_argument("UnitVector: dimension d must be >= 1");
    renormalize();
}

UnitVector UnitVector::pole(int d) {
    if (d < 1) throw std::invalid_argument("UnitVector::pole: d must be >= 1");
    std::vector<double> c(d + 1, 0.0);
    c.back() = 1.0;
    return UnitVector(std::move(c));
}

double UnitVector::dot(const UnitVector& other) const {
    if (other.coords_.size() != coords_.size())
        throw std::invalid_argument("UnitVector::dot: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < coords_.size(); ++i) s += coords_[i] * other.coords_[i];
    return s;
}

double UnitVector::norm() const {
    double s = 0.0;
    for (double c : coords_) s += c * c;
    return std::sqrt(s);
}

void UnitVector::renormalize() {
    double n = norm();
    if (!(n > 0.0) || !std::isfinite(n))
        throw std::invalid_argument("UnitVector: zero or non-finite norm");
    for (double& c : coords_) c /= n;
}

UnitVector uniform_on_sphere(int d, RngStream& rng) {
    if (d < 1) throw std::invalid_argument("uniform_on_sphere: d must be >= 1");
    while (true) {
        std::vector<double> c(d + 1);
        double n2 = 0.0;
        for (double& x : c) {
            x = rng.normal();
            n2 += x * x;
        }
        if (n2 > 1e-16) return UnitVector(std::move(c));
    }
}

UnitVector tangent_direction(const UnitVector& k, RngStream& rng) {
    const int d = k.dim();
    if (d == 1) {
        // S^0 in the tangent line: the two unit tangents (-k1, k0), (k1, -k0).
        double sgn = rng.uniform() < 0.5 ? 1.0 : -1.0;
        return UnitVector({-sgn * k[1], sgn * k[0]});
    }
    // Gaussian in R^{d+1}, project out the k component, renormalize.
    while (true) {
        std::vector<double> g(d + 1);
        for (double& x : g) x = rng.normal();
        double gk = 0.0;
        for (int i = 0; i <= d; ++i) gk += g[i] * k[i];
        double n2 = 0.0;
        for (int i = 0; i <= d; ++i) {
            g[i] -= gk * k[i];
            n2 += g[i] * g[i];
        }
        if (std::sqrt(n2) > 1e-8) return UnitVector(std::move(g));
    }
}

UnitVector jump(const UnitVector& k, double s, const UnitVector& u) {
    if (!(s >= -1.0 && s <= 1.0))
        throw std::invalid_argument("jump: cosine s must lie in [-1,1]");
    if (std::abs(u.dot(k)) > 1e-8)
        throw std::invalid_argument("jump: tangent direction not orthogonal to k");
    const double c = std::sqrt(std::max(0.0, 1.0 - s * s));
    std::vector<double> out(k.coords().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * k[i] + c * u[i];
    return UnitVector(std::move(out));
}

}  // namespace sphjump
