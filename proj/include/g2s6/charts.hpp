#pragma once

#include <utility>

#include "g2s6/g2_element.hpp"
#include "g2s6/su3.hpp"

namespace g2s6 {

/// The two affine charts of S^6. U1 excludes the south pole -i, U2 the
/// north pole i. The chart translators are inner automorphisms whose
/// defining square root sqrt(1 + 2 x2) is real only for x2 >= -1/2, so the
/// effective translator domains are the caps
///   U1: x2 > -1/2,   U2: x2 < 1/2,
/// which still cover the sphere and contain the equator.
enum class ChartId { U1, U2 };

/// Margin on 1 + 2 x2 (resp. 1 - 2 x2) below which a point is treated as
/// outside the chart.
inline constexpr double kChartGuard = 1e-6;

bool in_chart(const SpherePoint6& xi, ChartId chart, double guard = kChartGuard);

/// Bundle projection: evaluation of the automorphism at i.
SpherePoint6 fibration_p(const G2Element& g);

/// Almost complex structure J_xi(v) = xi v on the tangent space at xi.
/// Throws TangencyViolation unless v is imaginary and orthogonal to xi.
Octonion complex_structure_J(const SpherePoint6& xi, const Octonion& v,
                             double tol = 1e-9);

/// The unit octonion r with r1 = 1/2 solving r i conj(r) = xi, for xi in the
/// U1 cap. Throws PoleSingularity outside the cap.
Octonion r_xi(const SpherePoint6& xi, double guard = kChartGuard);

/// Equator form (1 + i)(1 + xi)/2, evaluated by octonion multiplication.
/// Throws NotOnEquator when x2 != 0.
Octonion r_xi_equator(const SpherePoint6& xi, double tol = 1e-9);

/// Translators Q_xi = conjugation by r_xi (sends i to xi) and
/// Q~_xi = conjugation by r_{-xi} (sends -i to xi).
G2Element translator_Q(const SpherePoint6& xi);
G2Element translator_Q_tilde(const SpherePoint6& xi);

/// Complex orthonormal frame of the tangent space at xi: the translator
/// images of (j, e, g). Together with their J_xi images these six vectors
/// are orthonormal.
struct ComplexFrame {
    SpherePoint6 base;
    ChartId chart;
    Octonion a, b, c;

    double orthonormality_residual() const;
};

ComplexFrame frame_at(const SpherePoint6& xi, ChartId chart);

/// Fiber coordinate of g over its base point: the complex coordinates of
/// (g j, g e, g g) in the chart frame, columnwise, with complex coordinate
/// <w, f> + I <w, J_xi f> for frame vector f.
/// Throws ChartViolation when the base point is outside the chart,
/// NonUnitary if the result fails su3_check.
SU3Matrix theta_xi(const G2Element& g, ChartId chart);

/// Reconstructs the fiber element with theta_xi(g, chart) = m from the first
/// two columns; the third column is validated against the reconstruction at
/// 1e-9 and an OrthogonalityViolation is thrown on mismatch.
G2Element theta_inverse(const SpherePoint6& xi, const SU3Matrix& m, ChartId chart);

/// Trivializations psi_1 (chart U1) and psi_2 (chart U2) with inverses.
std::pair<SpherePoint6, SU3Matrix> psi1(const G2Element& g);
std::pair<SpherePoint6, SU3Matrix> psi2(const G2Element& g);
G2Element psi1_inverse(const SpherePoint6& xi, const SU3Matrix& m);
G2Element psi2_inverse(const SpherePoint6& xi, const SU3Matrix& m);

/// Transition functions on the chart overlap:
/// psi1 . psi2^-1 (xi, phi) = (xi, t12(xi) phi) and t21 = t12^-1.
SU3Matrix transition_t12(const SpherePoint6& xi);
SU3Matrix transition_t21(const SpherePoint6& xi);

} // namespace g2s6
