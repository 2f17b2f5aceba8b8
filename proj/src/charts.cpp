#include "g2s6/charts.hpp"

#include <cmath>
#include <string>

namespace g2s6 {

bool in_chart(const SpherePoint6& xi, ChartId chart, double guard) {
    const double x2 = xi[1];
    return chart == ChartId::U1 ? (1.0 + 2.0 * x2 > guard) : (1.0 - 2.0 * x2 > guard);
}

SpherePoint6 fibration_p(const G2Element& g) {
    return SpherePoint6::from_octonion(apply(g, Octonion::i()));
}

Octonion complex_structure_J(const SpherePoint6& xi, const Octonion& v, double tol) {
    const double scale = std::max(1.0, norm(v));
    if (std::abs(v.real()) > tol * scale)
        throw TangencyViolation("J: vector is not purely imaginary");
    if (std::abs(inner(v, xi.octonion())) > tol * scale)
        throw TangencyViolation("J: vector is not orthogonal to the base point");
    return xi.octonion() * v;
}

Octonion r_xi(const SpherePoint6& xi, double guard) {
    const double x2 = xi[1];
    if (1.0 + 2.0 * x2 <= guard)
        throw PoleSingularity("r_xi: x2 = " + std::to_string(x2) +
                              " is outside the U1 translator cap x2 > -1/2");
    const double s = std::sqrt(1.0 + 2.0 * x2);
    const double d = 1.0 + x2;
    const double x3 = xi[2], x4 = xi[3], x5 = xi[4], x6 = xi[5], x7 = xi[6],
                 x8 = xi[7];
    return Octonion(1.0, s, (x3 * s - x4) / d, (x3 + x4 * s) / d, (x5 * s - x6) / d,
                    (x5 + x6 * s) / d, (x7 * s + x8) / d, (-x7 + x8 * s) / d) *
           0.5;
}

Octonion r_xi_equator(const SpherePoint6& xi, double tol) {
    if (std::abs(xi[1]) > tol)
        throw NotOnEquator("r_xi_equator: x2 = " + std::to_string(xi[1]));
    const Octonion one_plus_i = Octonion::one() + Octonion::i();
    const Octonion one_plus_xi = Octonion::one() + xi.octonion();
    return (one_plus_i * one_plus_xi) * 0.5;
}

G2Element translator_Q(const SpherePoint6& xi) {
    return inner_automorphism(r_xi(xi));
}

G2Element translator_Q_tilde(const SpherePoint6& xi) {
    return inner_automorphism(r_xi(-xi));
}

double ComplexFrame::orthonormality_residual() const {
    const Octonion vecs[6] = {a,
                              b,
                              c,
                              base.octonion() * a,
                              base.octonion() * b,
                              base.octonion() * c};
    double worst = 0.0;
    for (int m = 0; m < 6; ++m)
        for (int n = 0; n < 6; ++n)
            worst = std::max(worst,
                             std::abs(inner(vecs[m], vecs[n]) - (m == n ? 1.0 : 0.0)));
    return worst;
}

ComplexFrame frame_at(const SpherePoint6& xi, ChartId chart) {
    const G2Element q = chart == ChartId::U1 ? translator_Q(xi) : translator_Q_tilde(xi);
    return ComplexFrame{xi, chart, apply(q, Octonion::j()), apply(q, Octonion::e()),
                        apply(q, Octonion::g())};
}

namespace {

Complex coordinate(const Octonion& w, const Octonion& frame_vec,
                   const Octonion& j_frame_vec) {
    return {inner(w, frame_vec), inner(w, j_frame_vec)};
}

void require_chart(const SpherePoint6& xi, ChartId chart, const char* what) {
    if (!in_chart(xi, chart))
        throw ChartViolation(std::string(what) + ": base point with x2 = " +
                             std::to_string(xi[1]) + " is outside the chart");
}

} // namespace

SU3Matrix theta_xi(const G2Element& g, ChartId chart) {
    const SpherePoint6 xi = fibration_p(g);
    require_chart(xi, chart, "theta_xi");
    const ComplexFrame fr = frame_at(xi, chart);
    const Octonion x = xi.octonion();

    const Octonion images[3] = {apply(g, Octonion::j()), apply(g, Octonion::e()),
                                apply(g, Octonion::g())};
    const Octonion frame_vecs[3] = {fr.a, fr.b, fr.c};

    Matrix3c m;
    for (int row = 0; row < 3; ++row) {
        const Octonion jf = x * frame_vecs[row];
        for (int col = 0; col < 3; ++col)
            m(row, col) = coordinate(images[col], frame_vecs[row], jf);
    }
    return SU3Matrix::checked(m);
}

G2Element theta_inverse(const SpherePoint6& xi, const SU3Matrix& m, ChartId chart) {
    require_chart(xi, chart, "theta_inverse");
    const ComplexFrame fr = frame_at(xi, chart);
    const Octonion x = xi.octonion();
    const Octonion frame_vecs[3] = {fr.a, fr.b, fr.c};

    const auto reconstruct = [&](int col) {
        Octonion w;
        for (int row = 0; row < 3; ++row) {
            const Complex z = m(row, col);
            w = w + frame_vecs[row] * z.real() + (x * frame_vecs[row]) * z.imag();
        }
        return w;
    };

    const Octonion eta = reconstruct(0);
    const Octonion zeta = reconstruct(1);
    const G2Element g = G2Element::from_triple(xi, SpherePoint6::from_octonion(eta),
                                               SpherePoint6::from_octonion(zeta));

    // Columns 1-2 determine the element; column 3 must be consistent with it.
    const double round_trip = max_abs_diff(theta_xi(g, chart).matrix(), m.matrix());
    if (round_trip > 1e-9)
        throw OrthogonalityViolation(
            "theta_inverse: matrix inconsistent with an automorphism "
            "(round-trip residual " +
            std::to_string(round_trip) + ")");
    return g;
}

std::pair<SpherePoint6, SU3Matrix> psi1(const G2Element& g) {
    const SpherePoint6 xi = fibration_p(g);
    return {xi, theta_xi(g, ChartId::U1)};
}

std::pair<SpherePoint6, SU3Matrix> psi2(const G2Element& g) {
    const SpherePoint6 xi = fibration_p(g);
    return {xi, theta_xi(g, ChartId::U2)};
}

G2Element psi1_inverse(const SpherePoint6& xi, const SU3Matrix& m) {
    return theta_inverse(xi, m, ChartId::U1);
}

G2Element psi2_inverse(const SpherePoint6& xi, const SU3Matrix& m) {
    return theta_inverse(xi, m, ChartId::U2);
}

SU3Matrix transition_t12(const SpherePoint6& xi) {
    require_chart(xi, ChartId::U1, "transition_t12");
    require_chart(xi, ChartId::U2, "transition_t12");
    return theta_xi(theta_inverse(xi, SU3Matrix::identity(), ChartId::U2), ChartId::U1);
}

SU3Matrix transition_t21(const SpherePoint6& xi) {
    require_chart(xi, ChartId::U1, "transition_t21");
    require_chart(xi, ChartId::U2, "transition_t21");
    return theta_xi(theta_inverse(xi, SU3Matrix::identity(), ChartId::U1), ChartId::U2);
}

} // namespace g2s6
