#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sphjump {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Surface area of the unit sphere S^{n-1} embedded in R^n.
inline double sphere_area(int n) {
    if (n < 1) throw std::invalid_argument("sphere_area: n must be >= 1");
    return 2.0 * std::pow(kPi, 0.5 * n) / std::tgamma(0.5 * n);
}

// sigma(S^{d-1}) for the azimuthal factor of a zonal integral on S^d.
inline double azimuthal_area(int d) { return sphere_area(d); }

inline double beta_function(double a, double b) {
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

// Shortest round-trip decimal representation.
inline std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// FNV-1a, used for config fingerprints.
inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace sphjump
