#pragma once

#include <vector>

#include "sphjump/rng.hpp"

namespace sphjump {

// Point on S^d embedded in R^{d+1}, kept at unit norm.
class UnitVector {
  public:
    explicit UnitVector(std::vector<double> coords);

    static UnitVector pole(int d);  // e_{d+1}

    int dim() const { return static_cast<int>(coords_.size()) - 1; }
    const std::vector<double>& coords() const { return coords_; }
    double operator[](std::size_t i) const { return coords_[i]; }

    double dot(const UnitVector& other) const;
    double norm() const;
    void renormalize();

  private:
    std::vector<double> coords_;
};

// Uniform sample from the normalized surface measure on S^d.
UnitVector uniform_on_sphere(int d, RngStream& rng);

// Uniform direction in the tangent sphere at k. For d=1 the tangent
// sphere S^0 is the two unit tangents, each with probability 1/2.
UnitVector tangent_direction(const UnitVector& k, RngStream& rng);

// k' = s*k + sqrt(1-s^2)*u, renormalized. Requires u orthogonal to k.
UnitVector jump(const UnitVector& k, double s, const UnitVector& u);

}  // namespace sphjump
