#include "g2s6/sphere_point.hpp"

#include <cmath>

namespace g2s6 {

SpherePoint6 SpherePoint6::from_octonion(const Octonion& x, double imag_tol,
                                         double unit_tol) {
    if (std::abs(x.real()) > imag_tol)
        throw DomainViolation("sphere point: real part " + std::to_string(x.real()) +
                              " is not zero");
    Octonion v = x;
    v[0] = 0.0;
    const double n = norm(v);
    if (std::abs(n - 1.0) > unit_tol)
        throw NotUnit("sphere point: norm " + std::to_string(n) + " is not 1");
    return SpherePoint6(v);
}

SpherePoint6 SpherePoint6::from_imag(const std::array<double, 7>& x, double unit_tol) {
    Octonion v;
    for (int p = 0; p < 7; ++p) v[p + 1] = x[static_cast<std::size_t>(p)];
    return from_octonion(v, 0.0, unit_tol);
}

SpherePoint6 SpherePoint6::from_imag(const Vector7& x, double unit_tol) {
    Octonion v;
    for (int p = 0; p < 7; ++p) v[p + 1] = x[p];
    return from_octonion(v, 0.0, unit_tol);
}

SpherePoint6 SpherePoint6::axis(int idx) {
    return SpherePoint6(Octonion::basis(idx));
}

Vector7 SpherePoint6::imag() const {
    Vector7 out;
    for (int p = 0; p < 7; ++p) out[p] = value_[p + 1];
    return out;
}

SpherePoint6 SpherePoint6::operator-() const { return SpherePoint6(-value_); }

nlohmann::json SpherePoint6::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (int p = 1; p < 8; ++p) j.push_back(value_[p]);
    return j;
}

SpherePoint6 SpherePoint6::from_json(const nlohmann::json& j) {
    std::array<double, 7> x{};
    for (int p = 0; p < 7; ++p) x[static_cast<std::size_t>(p)] = j.at(p).get<double>();
    return from_imag(x);
}

Octonion random_octonion(Rng& rng) {
    Octonion out;
    for (int p = 0; p < 8; ++p) out[p] = rng.normal();
    return out;
}

Octonion random_unit_octonion(Rng& rng) {
    for (;;) {
        const Octonion x = random_octonion(rng);
        const double n = norm(x);
        if (n > 1e-6) return x * (1.0 / n);
    }
}

SpherePoint6 random_sphere_point(Rng& rng) {
    for (;;) {
        Octonion x;
        for (int p = 1; p < 8; ++p) x[p] = rng.normal();
        const double n = norm(x);
        if (n > 1e-6) return SpherePoint6::from_octonion(x * (1.0 / n));
    }
}

Octonion random_tangent(Rng& rng, const SpherePoint6& xi) {
    for (;;) {
        Octonion v;
        for (int p = 1; p < 8; ++p) v[p] = rng.normal();
        v = v - xi.octonion() * inner(v, xi.octonion());
        const double n = norm(v);
        if (n > 1e-6) return v * (1.0 / n);
    }
}

} // namespace g2s6
