#pragma once

#include <array>

#include <Eigen/Dense>

#include "g2s6/octonion.hpp"
#include "g2s6/random.hpp"
#include "json.hpp"

namespace g2s6 {

using Vector7 = Eigen::Matrix<double, 7, 1>;

/// A point of S^6: a unit purely imaginary octonion. The real coordinate is
/// exactly zero; the imaginary part is unit within 1e-12.
class SpherePoint6 {
  public:
    /// Validates |c1| and | |x| - 1 | against the given tolerances, then
    /// stores the value with the real coordinate cleared.
    /// Throws DomainViolation on a non-imaginary input, NotUnit on a
    /// non-unit one.
    static SpherePoint6 from_octonion(const Octonion& x, double imag_tol = 1e-9,
                                      double unit_tol = 1e-12);

    /// From the seven imaginary coordinates (x2, ..., x8).
    static SpherePoint6 from_imag(const std::array<double, 7>& x,
                                  double unit_tol = 1e-12);
    static SpherePoint6 from_imag(const Vector7& x, double unit_tol = 1e-12);

    static SpherePoint6 unit_i() { return axis(1); }
    static SpherePoint6 unit_j() { return axis(2); }
    static SpherePoint6 unit_e() { return axis(4); }
    static SpherePoint6 unit_g() { return axis(6); }
    /// Imaginary basis direction by octonion index 1..7.
    static SpherePoint6 axis(int idx);

    const Octonion& octonion() const { return value_; }
    /// Coordinate x2..x8 by octonion index 1..7.
    double operator[](int idx) const { return value_[idx]; }
    Vector7 imag() const;

    SpherePoint6 operator-() const;

    nlohmann::json to_json() const; // [x2, ..., x8]
    static SpherePoint6 from_json(const nlohmann::json& j);

  private:
    explicit SpherePoint6(const Octonion& value) : value_(value) {}
    Octonion value_;
};

inline double inner(const SpherePoint6& a, const SpherePoint6& b) {
    return inner(a.octonion(), b.octonion());
}

/// Uniform point of S^6 (seven standard normals, normalized).
SpherePoint6 random_sphere_point(Rng& rng);

/// Uniform unit tangent vector at xi: imaginary, orthogonal to xi.
Octonion random_tangent(Rng& rng, const SpherePoint6& xi);

} // namespace g2s6
