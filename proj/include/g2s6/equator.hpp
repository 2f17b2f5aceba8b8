#pragma once

#include "g2s6/charts.hpp"
#include "g2s6/su3.hpp"

namespace g2s6 {

/// A point (u, v, w) of S^5 in C^3, identified with the equator of S^6 via
/// the complex basis {j, e, g} of the i-orthogonal imaginary octonions.
struct EquatorPoint {
    Complex u, v, w;

    double norm_sq() const {
        return std::norm(u) + std::norm(v) + std::norm(w);
    }

    EquatorPoint operator-() const { return {-u, -v, -w}; }

    /// Validated constructor; throws NotUnit beyond tol.
    static EquatorPoint unit(Complex u, Complex v, Complex w, double tol = 1e-9);

    nlohmann::json to_json() const; // {"u":[re,im],"v":[re,im],"w":[re,im]}
    static EquatorPoint from_json(const nlohmann::json& j);
};

EquatorPoint random_equator_point(Rng& rng);

/// Equator embedding: u j + v e + w g with complex coordinates taken against
/// J_i, i.e. coordinates (x3..x8) = (u1, u2, v1, v2, w1, -w2).
SpherePoint6 embed_equator(const EquatorPoint& z, double tol = 1e-9);

/// Inverse of embed_equator. Throws NotOnEquator when x2 != 0.
EquatorPoint extract_equator(const SpherePoint6& xi, double tol = 1e-9);

/// The closed-form equatorial transition matrix
///   [ u^2       vu + conj(w)   wu - conj(v) ]
///   [ uv - conj(w)   v^2       wv + conj(u) ]
///   [ uw + conj(v)   vw - conj(u)   w^2     ].
SU3Matrix theta_closed_form(const EquatorPoint& z, double tol = 1e-9);

/// The antisymmetric matrix [[0, w, -v], [-w, 0, u], [v, -u, 0]].
/// Defined for any triple; no unit-norm requirement.
Matrix3c m_z(const EquatorPoint& z);

/// z z^t + conj(m_z); equal to theta_closed_form entrywise.
SU3Matrix puttmann_form(const EquatorPoint& z, double tol = 1e-9);

Matrix3c outer_zzt(const EquatorPoint& z);

/// Closed form of the translator action on the i-orthogonal subspace:
///   Q_xi(v) = ((-1 + i + xi + i xi) v + <v, xi + i xi> (1 + i + xi + i xi)) / 2
/// for unit xi and v both imaginary and orthogonal to i.
/// Throws DomainViolation outside that domain.
Octonion q_xi_closed(const Octonion& xi_img, const Octonion& v, double tol = 1e-9);

/// Closed form of Q_{-xi}^-1 . Q_xi on the same domain:
///   v xi - <v xi, 1>(1 + xi) - <v xi, i>((1 + xi) i).
Octonion q_composition_closed(const Octonion& xi_img, const Octonion& v,
                              double tol = 1e-9);

/// Matrix of Q_{-xi}^-1 . Q_xi: columns are the images of (j, e, g) in the
/// J_{-i} complex coordinates, conjugated entrywise to express the map on a
/// single copy of C^3. Equals theta_closed_form.
SU3Matrix matrix_of_q_composition(const EquatorPoint& z, double tol = 1e-9);

} // namespace g2s6
