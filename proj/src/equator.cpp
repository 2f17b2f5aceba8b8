#include "g2s6/equator.hpp"

#include <cmath>
#include <string>

namespace g2s6 {

namespace {

void require_unit(const EquatorPoint& z, double tol, const char* what) {
    const double n2 = z.norm_sq();
    if (std::abs(n2 - 1.0) > tol)
        throw NotUnit(std::string(what) + ": |z|^2 = " + std::to_string(n2));
}

} // namespace

EquatorPoint EquatorPoint::unit(Complex u, Complex v, Complex w, double tol) {
    const EquatorPoint z{u, v, w};
    require_unit(z, tol, "equator point");
    return z;
}

nlohmann::json EquatorPoint::to_json() const {
    return {{"u", {u.real(), u.imag()}},
            {"v", {v.real(), v.imag()}},
            {"w", {w.real(), w.imag()}}};
}

EquatorPoint EquatorPoint::from_json(const nlohmann::json& j) {
    const auto cx = [&](const char* key) {
        return Complex(j.at(key).at(0).get<double>(), j.at(key).at(1).get<double>());
    };
    return {cx("u"), cx("v"), cx("w")};
}

EquatorPoint random_equator_point(Rng& rng) {
    for (;;) {
        EquatorPoint z{{rng.normal(), rng.normal()},
                       {rng.normal(), rng.normal()},
                       {rng.normal(), rng.normal()}};
        const double n = std::sqrt(z.norm_sq());
        if (n > 1e-6)
            return {z.u / n, z.v / n, z.w / n};
    }
}

SpherePoint6 embed_equator(const EquatorPoint& z, double tol) {
    require_unit(z, tol, "embed_equator");
    // J_i(g) = ig = -h, so the imaginary part of w lands on -h.
    const Octonion x(0.0, 0.0, z.u.real(), z.u.imag(), z.v.real(), z.v.imag(),
                     z.w.real(), -z.w.imag());
    return SpherePoint6::from_octonion(x, 0.0, 1e-9);
}

EquatorPoint extract_equator(const SpherePoint6& xi, double tol) {
    if (std::abs(xi[1]) > tol)
        throw NotOnEquator("extract_equator: x2 = " + std::to_string(xi[1]));
    return {{xi[2], xi[3]}, {xi[4], xi[5]}, {xi[6], -xi[7]}};
}

SU3Matrix theta_closed_form(const EquatorPoint& z, double tol) {
    require_unit(z, tol, "theta_closed_form");
    const Complex u = z.u, v = z.v, w = z.w;
    Matrix3c m;
    m << u * u, v * u + std::conj(w), w * u - std::conj(v),
         u * v - std::conj(w), v * v, w * v + std::conj(u),
         u * w + std::conj(v), v * w - std::conj(u), w * w;
    return SU3Matrix::checked(m, 1e-10);
}

Matrix3c m_z(const EquatorPoint& z) {
    Matrix3c m;
    m << Complex(0), z.w, -z.v,
         -z.w, Complex(0), z.u,
         z.v, -z.u, Complex(0);
    return m;
}

Matrix3c outer_zzt(const EquatorPoint& z) {
    Eigen::Vector3cd col(z.u, z.v, z.w);
    return col * col.transpose();
}

SU3Matrix puttmann_form(const EquatorPoint& z, double tol) {
    require_unit(z, tol, "puttmann_form");
    return SU3Matrix::checked(outer_zzt(z) + m_z(z).conjugate(), 1e-10);
}

namespace {

void require_v_i(const Octonion& x, double tol, const char* what) {
    const double scale = std::max(1.0, norm(x));
    if (std::abs(x[0]) > tol * scale || std::abs(x[1]) > tol * scale)
        throw DomainViolation(std::string(what) +
                              ": argument is not orthogonal to span{1, i}");
}

} // namespace

Octonion q_xi_closed(const Octonion& xi_img, const Octonion& v, double tol) {
    require_v_i(xi_img, tol, "q_xi_closed");
    require_v_i(v, tol, "q_xi_closed");
    if (std::abs(norm(xi_img) - 1.0) > tol)
        throw DomainViolation("q_xi_closed: xi is not unit");
    const Octonion i = Octonion::i();
    const Octonion ixi = i * xi_img;
    const Octonion lead = -Octonion::one() + i + xi_img + ixi;
    const Octonion tail = Octonion::one() + i + xi_img + ixi;
    return (lead * v + tail * inner(v, xi_img + ixi)) * 0.5;
}

Octonion q_composition_closed(const Octonion& xi_img, const Octonion& v, double tol) {
    require_v_i(xi_img, tol, "q_composition_closed");
    require_v_i(v, tol, "q_composition_closed");
    if (std::abs(norm(xi_img) - 1.0) > tol)
        throw DomainViolation("q_composition_closed: xi is not unit");
    const Octonion vxi = v * xi_img;
    const Octonion one_plus_xi = Octonion::one() + xi_img;
    return vxi - one_plus_xi * vxi[0] - (one_plus_xi * Octonion::i()) * vxi[1];
}

SU3Matrix matrix_of_q_composition(const EquatorPoint& z, double tol) {
    require_unit(z, tol, "matrix_of_q_composition");
    const SpherePoint6 xi = embed_equator(z, tol);
    const Octonion minus_i = -Octonion::i();
    const Octonion basis[3] = {Octonion::j(), Octonion::e(), Octonion::g()};

    Matrix3c m_bar;
    for (int col = 0; col < 3; ++col) {
        const Octonion img = q_composition_closed(xi.octonion(), basis[col]);
        for (int row = 0; row < 3; ++row) {
            // J_{-i} complex coordinate against the standard basis.
            m_bar(row, col) = Complex(inner(img, basis[row]),
                                      inner(img, minus_i * basis[row]));
        }
    }
    return SU3Matrix::checked(m_bar.conjugate(), 1e-10);
}

} // namespace g2s6
