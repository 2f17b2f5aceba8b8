#include "g2s6/g2_element.hpp"

#include <cmath>
#include <string>

namespace g2s6 {

namespace {

Octonion column_to_octonion(const Matrix7& m, int col) {
    Octonion out;
    for (int p = 0; p < 7; ++p) out[p + 1] = m(p, col);
    return out;
}

void set_column(Matrix7& m, int col, const Octonion& x) {
    for (int p = 0; p < 7; ++p) m(p, col) = x[p + 1];
}

void check_invariants(const Matrix7& m, double tol) {
    const double orth = orthogonality_residual(m);
    if (orth > 1e-10)
        throw OrthogonalityViolation("matrix not orthogonal: residual " +
                                     std::to_string(orth));
    const double det = m.determinant();
    if (std::abs(det - 1.0) > 1e-9)
        throw OrthogonalityViolation("matrix determinant " + std::to_string(det) +
                                     " is not +1");
    const double mult = multiplicativity_residual(m);
    if (mult > std::max(tol, 1e-9))
        throw OrthogonalityViolation("matrix not multiplicative: residual " +
                                     std::to_string(mult));
}

} // namespace

G2Element G2Element::identity() {
    return G2Element(Matrix7::Identity(), SpherePoint6::unit_i(),
                     SpherePoint6::unit_j(), SpherePoint6::unit_e());
}

G2Element G2Element::from_triple(const SpherePoint6& xi, const SpherePoint6& eta,
                                 const SpherePoint6& zeta, double tol) {
    const Octonion x = xi.octonion();
    const Octonion y = eta.octonion();
    const Octonion z = zeta.octonion();
    const Octonion xy = x * y;

    const struct {
        const char* name;
        double value;
    } conditions[] = {
        {"<eta, xi>", inner(y, x)},
        {"<zeta, xi>", inner(z, x)},
        {"<zeta, eta>", inner(z, y)},
        {"<zeta, xi eta>", inner(z, xy)},
    };
    for (const auto& cond : conditions) {
        if (std::abs(cond.value) > tol)
            throw OrthogonalityViolation(std::string("triple not orthogonal: ") +
                                         cond.name + " = " + std::to_string(cond.value));
    }

    Matrix7 m;
    set_column(m, 0, x);
    set_column(m, 1, y);
    set_column(m, 2, xy);
    set_column(m, 3, z);
    set_column(m, 4, x * z);
    set_column(m, 5, y * z);
    set_column(m, 6, xy * z);
    check_invariants(m, tol);
    return G2Element(m, xi, eta, zeta);
}

G2Element G2Element::from_matrix(const Matrix7& m, double tol) {
    check_invariants(m, tol);
    return G2Element(m, SpherePoint6::from_octonion(column_to_octonion(m, 0)),
                     SpherePoint6::from_octonion(column_to_octonion(m, 1)),
                     SpherePoint6::from_octonion(column_to_octonion(m, 3)));
}

nlohmann::json G2Element::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < 7; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < 7; ++c) row.push_back(m_(r, c));
        rows.push_back(row);
    }
    return {{"matrix", rows},
            {"triple",
             {{"xi", xi_.to_json()}, {"eta", eta_.to_json()}, {"zeta", zeta_.to_json()}}}};
}

G2Element G2Element::from_json(const nlohmann::json& j) {
    Matrix7 m;
    const auto& rows = j.at("matrix");
    for (int r = 0; r < 7; ++r)
        for (int c = 0; c < 7; ++c) m(r, c) = rows.at(r).at(c).get<double>();
    return from_matrix(m);
}

Octonion apply(const Matrix7& m, const Octonion& x) {
    Octonion out;
    out[0] = x[0];
    for (int r = 0; r < 7; ++r) {
        double s = 0.0;
        for (int c = 0; c < 7; ++c) s += m(r, c) * x[c + 1];
        out[r + 1] = s;
    }
    return out;
}

Octonion apply(const G2Element& g, const Octonion& x) { return apply(g.matrix(), x); }

SpherePoint6 apply(const G2Element& g, const SpherePoint6& x) {
    return SpherePoint6::from_octonion(apply(g, x.octonion()));
}

G2Element compose(const G2Element& g, const G2Element& h) {
    return G2Element::from_matrix(g.matrix() * h.matrix());
}

G2Element inverse(const G2Element& g) {
    return G2Element::from_matrix(g.matrix().transpose());
}

double multiplicativity_residual(const Matrix7& m) {
    Octonion img[8];
    for (int p = 1; p < 8; ++p) img[p] = apply(m, Octonion::basis(p));
    double worst = 0.0;
    for (int p = 1; p < 8; ++p) {
        for (int q = 1; q < 8; ++q) {
            const Octonion lhs = apply(m, Octonion::basis(p) * Octonion::basis(q));
            worst = std::max(worst, norm(lhs - img[p] * img[q]));
        }
    }
    return worst;
}

double orthogonality_residual(const Matrix7& m) {
    return (m.transpose() * m - Matrix7::Identity()).cwiseAbs().maxCoeff();
}

Matrix7 conjugation_matrix(const Octonion& r) {
    const Octonion r_inv = inverse(r);
    Matrix7 m;
    for (int q = 0; q < 7; ++q) {
        const Octonion img = (r * Octonion::basis(q + 1)) * r_inv;
        for (int p = 0; p < 7; ++p) m(p, q) = img[p + 1];
    }
    return m;
}

double inner_automorphism_criterion(const Octonion& r) {
    const double n2 = norm_sq(r);
    return std::abs(4.0 * r[0] * r[0] - n2) / n2;
}

G2Element inner_automorphism(const Octonion& r, double tol) {
    if (norm_sq(r) <= 1e-30) throw ZeroDivisor("inner automorphism: r = 0");
    if (r.imag_norm() <= 1e-12 * norm(r))
        throw NotInnerAutomorphism("inner automorphism requires a non-real octonion");
    const double crit = inner_automorphism_criterion(r);
    if (crit > tol)
        throw NotInnerAutomorphism("criterion 4 r1^2 = |r|^2 violated: residual " +
                                   std::to_string(crit));
    return G2Element::from_matrix(conjugation_matrix(r));
}

G2Element random_g2(Rng& rng) {
    const SpherePoint6 xi = random_sphere_point(rng);
    const Octonion x = xi.octonion();
    const Octonion eta = random_tangent(rng, xi);
    const Octonion xy = x * eta;

    // Gram-Schmidt a Gaussian vector against span{xi, eta, xi eta},
    // resampling degenerate draws.
    Octonion zeta;
    double n = 0.0;
    do {
        zeta = Octonion{};
        for (int p = 1; p < 8; ++p) zeta[p] = rng.normal();
        zeta = zeta - x * inner(zeta, x) - eta * inner(zeta, eta) - xy * inner(zeta, xy);
        n = norm(zeta);
    } while (n <= 1e-6);
    zeta = zeta * (1.0 / n);

    return G2Element::from_triple(xi, SpherePoint6::from_octonion(eta),
                                  SpherePoint6::from_octonion(zeta));
}

G2Element random_g2(std::uint64_t seed) {
    Rng rng(seed);
    return random_g2(rng);
}

double j_equivariance_residual(const Matrix7& m, std::size_t n_samples, Rng& rng) {
    double worst = 0.0;
    for (std::size_t s = 0; s < n_samples; ++s) {
        const SpherePoint6 xi = random_sphere_point(rng);
        const Octonion v = random_tangent(rng, xi);
        const Octonion lhs = apply(m, xi.octonion() * v);
        const Octonion rhs = apply(m, xi.octonion()) * apply(m, v);
        worst = std::max(worst, norm(lhs - rhs));
    }
    return worst;
}

double j_equivariance_residual(const G2Element& g, std::size_t n_samples,
                               std::uint64_t seed) {
    Rng rng(seed);
    return j_equivariance_residual(g.matrix(), n_samples, rng);
}

IdentityReport check_j_equivariance(const G2Element& g, std::size_t n_samples,
                                    std::uint64_t seed, double tol) {
    IdentityReport report;
    report.suite = "j-equivariance";
    report.seed = seed;
    report.add("J-equivariance", "g(xi v) = g(xi) g(v) for tangents v",
               j_equivariance_residual(g, n_samples, seed), tol, n_samples);
    return report;
}

Matrix7 j_swap_control() {
    Matrix7 m = Matrix7::Identity();
    m(1, 1) = 0.0;
    m(3, 3) = 0.0;
    m(1, 3) = 1.0;
    m(3, 1) = 1.0;
    return m;
}

} // namespace g2s6
