#include "g2s6/suites.hpp"

#include <algorithm>
#include <cmath>

#include "g2s6/charts.hpp"
#include "g2s6/degree.hpp"
#include "g2s6/equator.hpp"
#include "g2s6/g2_element.hpp"

namespace g2s6 {

namespace {

std::size_t scaled(const SuiteConfig& cfg, std::size_t divisor, std::size_t floor) {
    return std::max<std::size_t>(floor, cfg.samples / divisor);
}

SpherePoint6 random_u1_point(Rng& rng) {
    // Uniform on the sphere, conditioned on the U1 translator cap with a
    // margin so denominators stay tame.
    for (;;) {
        const SpherePoint6 xi = random_sphere_point(rng);
        if (1.0 + 2.0 * xi[1] > 0.01) return xi;
    }
}

SpherePoint6 random_overlap_point(Rng& rng) {
    for (;;) {
        const SpherePoint6 xi = random_sphere_point(rng);
        if (std::abs(2.0 * xi[1]) < 0.99) return xi;
    }
}

G2Element random_fiber_element(Rng& rng, const SpherePoint6& xi) {
    const Octonion x = xi.octonion();
    const Octonion eta = random_tangent(rng, xi);
    const Octonion xy = x * eta;
    Octonion zeta;
    double n = 0.0;
    do {
        zeta = Octonion{};
        for (int p = 1; p < 8; ++p) zeta[p] = rng.normal();
        zeta = zeta - x * inner(zeta, x) - eta * inner(zeta, eta) - xy * inner(zeta, xy);
        n = norm(zeta);
    } while (n <= 1e-6);
    return G2Element::from_triple(xi, SpherePoint6::from_octonion(eta),
                                  SpherePoint6::from_octonion(zeta * (1.0 / n)));
}

} // namespace

IdentityReport algebra_suite(const SuiteConfig& cfg, const MultiplicationTable& table) {
    if (cfg.samples < 1) throw ConfigError("algebra suite: samples must be >= 1");
    IdentityReport report;
    report.suite = "algebra";
    report.seed = cfg.seed;
    Rng rng(cfg.seed);

    const std::size_t n = cfg.samples;
    const auto m = [&](const Octonion& a, const Octonion& b) { return mul(a, b, table); };

    double alt_left = 0, alt_right = 0, flex = 0, norm_mult = 0, lin_conj = 0,
           lin_sym = 0, inner_exch = 0, moufang = 0, antiauto = 0, inv_round = 0,
           bracket = 0;
    for (std::size_t s = 0; s < n; ++s) {
        const Octonion a = random_unit_octonion(rng);
        const Octonion b = random_unit_octonion(rng);
        const Octonion c = random_unit_octonion(rng);
        const Octonion x = random_unit_octonion(rng);
        const Octonion y = random_unit_octonion(rng);

        alt_left = std::max(alt_left, norm(m(a, m(a, b)) - m(m(a, a), b)));
        alt_right = std::max(alt_right, norm(m(m(a, b), b) - m(a, m(b, b))));
        flex = std::max(flex, norm(m(m(a, b), a) - m(a, m(b, a))));
        norm_mult = std::max(norm_mult, std::abs(norm(m(a, b)) - norm(a) * norm(b)));
        lin_conj = std::max(lin_conj, norm(m(m(a, x), conj(y)) + m(m(a, y), conj(x)) -
                                           a * (2.0 * inner(x, y))));
        lin_sym = std::max(lin_sym, norm(m(m(a, x), y) + m(m(a, y), x) -
                                         m(a, m(x, y)) - m(a, m(y, x))));
        inner_exch = std::max(inner_exch,
                              std::abs(inner(m(a, x), m(b, y)) + inner(m(b, x), m(a, y)) -
                                       2.0 * inner(a, b) * inner(x, y)));
        moufang = std::max(moufang, norm(m(m(a, m(b, c)), a) - m(m(a, b), m(c, a))));
        antiauto = std::max(antiauto, norm(conj(m(a, b)) - m(conj(b), conj(a))));
        inv_round = std::max(inv_round,
                             norm(m(a, conj(a) * (1.0 / norm_sq(a))) - Octonion::one()));
        bracket = std::max(bracket, norm(m(m(a, x), conj(a) * (1.0 / norm_sq(a))) -
                                         m(a, m(x, conj(a) * (1.0 / norm_sq(a))))));
    }

    // Exhaustive basis triples keep the Moufang probe deterministic; they
    // contribute nothing for a correct table and an exact integer gap for a
    // corrupted one.
    for (int p = 0; p < 8; ++p)
        for (int q = 0; q < 8; ++q)
            for (int r = 0; r < 8; ++r) {
                const Octonion a = Octonion::basis(p);
                const Octonion b = Octonion::basis(q);
                const Octonion c = Octonion::basis(r);
                moufang =
                    std::max(moufang, norm(m(m(a, m(b, c)), a) - m(m(a, b), m(c, a))));
            }

    double conj_reflection = 0.0;
    {
        Rng rng2(cfg.seed + 1);
        for (std::size_t s = 0; s < std::min<std::size_t>(n, 1000); ++s) {
            const Octonion a = random_octonion(rng2);
            conj_reflection = std::max(
                conj_reflection, norm(conj(a) - (Octonion::one() * (2.0 * a[0]) - a)));
        }
    }

    const double regen =
        MultiplicationTable::from_doubling_rule() == table ? 0.0 : 1.0;

    const Octonion wit1 = m(m(Octonion::i(), Octonion::j()), Octonion::e());
    const Octonion wit2 = m(Octonion::i(), m(Octonion::j(), Octonion::e()));
    const double witness = norm(wit1 - Octonion::h()) + norm(wit2 + Octonion::h());

    const double tol = cfg.tol_algebra;
    report.add("alternative law (left)", "a(ab) = (aa)b", alt_left, tol, n);
    report.add("alternative law (right)", "(ab)b = a(bb)", alt_right, tol, n);
    report.add("flexibility", "(ab)a = a(ba)", flex, tol, n);
    report.add("norm multiplicativity", "|ab| = |a| |b|", norm_mult, tol, n);
    report.add("linearized alternativity", "ax.conj(y) + ay.conj(x) = 2<x,y>a",
               lin_conj, tol, n);
    report.add("product symmetrization", "ax.y + ay.x = a.xy + a.yx", lin_sym, tol, n);
    report.add("inner product exchange", "<ax,by> + <bx,ay> = 2<a,b><x,y>", inner_exch,
               tol, n);
    report.add("Moufang identity", "a(bc)a = (ab)(ca)", moufang, tol, n + 512);
    report.add("conjugation antiautomorphism", "conj(ab) = conj(b) conj(a)", antiauto,
               tol, n);
    report.add("conjugation reflection", "conj(a) = 2 re(a) - a (exact)",
               conj_reflection, 1e-15, std::min<std::size_t>(n, 1000));
    report.add("inverse round trip", "a conj(a)/|a|^2 = 1", inv_round, tol, n);
    report.add("well-bracketed conjugation", "(ra)r^-1 = r(ar^-1)", bracket, tol, n);
    report.add("table regeneration", "doubling rule reproduces the stored table",
               regen, 0.5, 1);
    report.add("associator witness", "(ij)e = h and i(je) = -h", witness, 1e-15, 1);
    return report;
}

IdentityReport g2_suite(const SuiteConfig& cfg) {
    if (cfg.samples < 1) throw ConfigError("g2 suite: samples must be >= 1");
    IdentityReport report;
    report.suite = "g2";
    report.seed = cfg.seed;
    Rng rng(cfg.seed);

    const double tol = cfg.tol_bundle;

    {
        const G2Element id = G2Element::from_triple(
            SpherePoint6::unit_i(), SpherePoint6::unit_j(), SpherePoint6::unit_e());
        const double residual =
            (id.matrix() - Matrix7::Identity()).cwiseAbs().maxCoeff();
        report.add("defining triple", "triple (i, j, e) yields the identity (exact)",
                   residual, 1e-15, 1);
    }

    const std::size_t n_elem = scaled(cfg, 10, 50);
    double orth = 0, det = 0, multiplic = 0, action = 0, comp = 0, inv = 0;
    for (std::size_t s = 0; s < n_elem; ++s) {
        const G2Element g = random_g2(rng);
        const G2Element h = random_g2(rng);
        orth = std::max(orth, orthogonality_residual(g.matrix()));
        det = std::max(det, std::abs(g.matrix().determinant() - 1.0));
        multiplic = std::max(multiplic, multiplicativity_residual(g.matrix()));

        const Octonion x = random_unit_octonion(rng);
        const Octonion y = random_unit_octonion(rng);
        action = std::max(action, norm(apply(g, x * y) - apply(g, x) * apply(g, y)));
        comp = std::max(comp, norm(apply(compose(g, h), x) - apply(g, apply(h, x))));
        inv = std::max(inv, (compose(g, inverse(g)).matrix() - Matrix7::Identity())
                                .cwiseAbs()
                                .maxCoeff());
    }
    report.add("orthogonality", "G2 elements lie in O(7)", orth, 1e-10, n_elem);
    report.add("determinant", "G2 elements lie in SO(7)", det, tol, n_elem);
    report.add("multiplicativity", "Phi(xy) = Phi(x) Phi(y) on all basis pairs",
               multiplic, tol, n_elem);
    report.add("automorphism action", "g(xy) = g(x) g(y) on random octonions", action,
               tol, n_elem);
    report.add("composition action", "(gh)(x) = g(h(x))", comp, tol, n_elem);
    report.add("inverse round trip", "g g^-1 = id", inv, 1e-10, n_elem);

    {
        const std::size_t n_inner = scaled(cfg, 10, 100);
        double positive = 0;
        double negative_min = 1e9;
        std::size_t negatives = 0;
        for (std::size_t s = 0; s < n_inner; ++s) {
            Octonion im;
            for (int p = 1; p < 8; ++p) im[p] = rng.normal();
            im = im * (std::sqrt(0.75) / im.imag_norm());
            Octonion r = im;
            r[0] = 0.5; // unit octonion satisfying 4 r1^2 = |r|^2
            positive = std::max(positive, multiplicativity_residual(conjugation_matrix(r)));
        }
        while (negatives < n_inner) {
            const Octonion r = random_unit_octonion(rng);
            if (std::abs(4.0 * r[0] * r[0] - 1.0) <= 0.1) continue;
            if (r.imag_norm() < 1e-9) continue;
            ++negatives;
            negative_min =
                std::min(negative_min, multiplicativity_residual(conjugation_matrix(r)));
        }
        report.add("inner automorphism criterion", "4 r1^2 = |r|^2 yields automorphisms",
                   positive, 1e-10, n_inner);
        report.add("inner automorphism rejection",
                   "4 r1^2 != |r|^2 breaks multiplicativity", negative_min, 1e-3,
                   n_inner, IdentityCheck::Sense::AboveTol);
    }

    {
        const std::size_t n_j = scaled(cfg, 10, 100);
        Rng jrng(cfg.seed + 2);
        const G2Element g = random_g2(jrng);
        const double equiv = j_equivariance_residual(g.matrix(), n_j, jrng);
        report.add("J-equivariance", "g(xi v) = g(xi) g(v) for tangents v", equiv, tol,
                   n_j);
        Rng nrng(cfg.seed + 3);
        const double control = j_equivariance_residual(j_swap_control(), n_j, nrng);
        report.add("J-equivariance control", "a j/e swap in O(7) is not J-equivariant",
                   control, 0.1, n_j, IdentityCheck::Sense::AboveTol);
    }

    {
        const std::size_t n_fiber = scaled(cfg, 50, 20);
        double su3 = 0;
        for (std::size_t s = 0; s < n_fiber; ++s) {
            const G2Element g = random_fiber_element(rng, SpherePoint6::unit_i());
            const Matrix3c m = theta_xi(g, ChartId::U1).matrix();
            su3 = std::max(su3,
                           (m.adjoint() * m - Matrix3c::Identity()).cwiseAbs().maxCoeff());
            su3 = std::max(su3, std::abs(m.determinant() - Complex(1.0)));
        }
        report.add("stabilizer is special unitary",
                   "the fiber over i acts on C^3 with unit determinant", su3, 1e-9,
                   n_fiber);
    }

    return report;
}

IdentityReport charts_suite(const SuiteConfig& cfg) {
    if (cfg.samples < 1) throw ConfigError("charts suite: samples must be >= 1");
    IdentityReport report;
    report.suite = "charts";
    report.seed = cfg.seed;
    Rng rng(cfg.seed);

    const double tol = cfg.tol_bundle;

    const std::size_t n_tr = scaled(cfg, 1, 100);
    double conj_res = 0, unit_res = 0, half_res = 0, system_res = 0;
    for (std::size_t s = 0; s < n_tr; ++s) {
        const SpherePoint6 xi = random_u1_point(rng);
        const Octonion r = r_xi(xi);
        conj_res = std::max(conj_res, norm((r * Octonion::i()) * conj(r) - xi.octonion()));
        unit_res = std::max(unit_res, std::abs(norm(r) - 1.0));
        half_res = std::max(half_res, std::abs(r[0] - 0.5));

        // The seven scalar equations of the conjugation system, written out.
        const double r1 = r[0], r2 = r[1], r3 = r[2], r4 = r[3], r5 = r[4], r6 = r[5],
                     r7 = r[6], r8 = r[7];
        const double eqs[7] = {
            r1 * r1 + r2 * r2 - r3 * r3 - r4 * r4 - r5 * r5 - r6 * r6 - r7 * r7 -
                r8 * r8 - xi[1],
            2.0 * (r2 * r3 + r1 * r4) - xi[2],
            2.0 * (r2 * r4 - r1 * r3) - xi[3],
            2.0 * (r2 * r5 + r1 * r6) - xi[4],
            2.0 * (r2 * r6 - r1 * r5) - xi[5],
            2.0 * (r2 * r7 - r1 * r8) - xi[6],
            2.0 * (r1 * r7 + r2 * r8) - xi[7],
        };
        for (double eq : eqs) system_res = std::max(system_res, std::abs(eq));
    }
    report.add("translator conjugation", "r_xi i conj(r_xi) = xi", conj_res, tol, n_tr);
    report.add("translator scalar part", "first coordinate of r_xi is 1/2", half_res,
               1e-14, n_tr);
    report.add("translator unit norm", "|r_xi| = 1", unit_res, 1e-10, n_tr);
    report.add("translator system", "the seven quadratic equations hold", system_res,
               tol, n_tr);

    {
        const std::size_t n_eq = scaled(cfg, 10, 100);
        double simplification = 0;
        for (std::size_t s = 0; s < n_eq; ++s) {
            const SpherePoint6 xi = embed_equator(random_equator_point(rng));
            simplification =
                std::max(simplification, norm(r_xi(xi) - r_xi_equator(xi)));
        }
        report.add("equator simplification", "r_xi = (1+i)(1+xi)/2 on the equator",
                   simplification, 1e-12, n_eq);
    }

    const std::size_t n_q = scaled(cfg, 10, 50);
    double q_contract = 0, qt_contract = 0, frame_res = 0, coherence = 0, j_sq = 0;
    for (std::size_t s = 0; s < n_q; ++s) {
        const SpherePoint6 xi = random_overlap_point(rng);
        const G2Element q = translator_Q(xi);
        const G2Element qt = translator_Q_tilde(xi);
        q_contract = std::max(q_contract, norm(apply(q, Octonion::i()) - xi.octonion()));
        qt_contract =
            std::max(qt_contract, norm(apply(qt, -Octonion::i()) - xi.octonion()));
        frame_res = std::max(frame_res,
                             frame_at(xi, ChartId::U1).orthonormality_residual());
        frame_res = std::max(frame_res,
                             frame_at(xi, ChartId::U2).orthonormality_residual());
        coherence = std::max(coherence, max_abs_diff(theta_xi(q, ChartId::U1).matrix(),
                                                     Matrix3c::Identity()));

        const Octonion v = random_tangent(rng, xi);
        const Octonion jv = complex_structure_J(xi, v);
        j_sq = std::max(j_sq, norm(complex_structure_J(xi, jv) + v));
    }
    report.add("translator base point", "Q_xi sends i to xi", q_contract, 1e-10, n_q);
    report.add("co-translator base point", "Q~_xi sends -i to xi", qt_contract, 1e-10,
               n_q);
    report.add("frame orthonormality", "{a,b,c, J a, J b, J c} is orthonormal",
               frame_res, 1e-10, n_q);
    report.add("frame coherence", "theta of the translator is the identity", coherence,
               1e-10, n_q);
    report.add("complex structure", "J_xi(J_xi(v)) = -v", j_sq, 1e-11, n_q);

    {
        const std::size_t n_rt = scaled(cfg, 10, 50);
        double rt1 = 0, rt2 = 0, lin = 0, cocycle = 0;
        for (std::size_t s = 0; s < n_rt; ++s) {
            const SpherePoint6 xi = random_overlap_point(rng);
            const SU3Matrix phi = random_su3(rng);

            const G2Element g1 = psi1_inverse(xi, phi);
            const auto [xi1, m1] = psi1(g1);
            rt1 = std::max({rt1, max_abs_diff(m1.matrix(), phi.matrix()),
                            norm(xi1.octonion() - xi.octonion())});

            const G2Element g2 = psi2_inverse(xi, phi);
            const auto [xi2, m2] = psi2(g2);
            rt2 = std::max({rt2, max_abs_diff(m2.matrix(), phi.matrix()),
                            norm(xi2.octonion() - xi.octonion())});

            const SU3Matrix t12 = transition_t12(xi);
            lin = std::max(lin, max_abs_diff(theta_xi(g2, ChartId::U1).matrix(),
                                             t12.matrix() * phi.matrix()));
            cocycle = std::max(cocycle,
                               max_abs_diff(t12.matrix() * transition_t21(xi).matrix(),
                                            Matrix3c::Identity()));
        }
        report.add("first trivialization round trip", "psi1 . psi1^-1 = id", rt1, tol,
                   n_rt);
        report.add("second trivialization round trip", "psi2 . psi2^-1 = id", rt2, tol,
                   n_rt);
        report.add("transition linearity",
                   "theta . theta~^-1 is left multiplication by t12", lin, tol, n_rt);
        report.add("two-chart cocycle", "t12 t21 = 1", cocycle, tol, n_rt);
    }

    {
        const std::size_t n_cf = scaled(cfg, 10, 100);
        double closed = 0;
        for (std::size_t s = 0; s < n_cf; ++s) {
            const SpherePoint6 xi = embed_equator(random_equator_point(rng));
            const G2Element q = translator_Q(xi);
            Octonion v;
            do {
                v = Octonion{};
                for (int p = 2; p < 8; ++p) v[p] = rng.normal();
            } while (norm(v) < 1e-6);
            v = v * (1.0 / norm(v));
            closed = std::max(closed, norm(q_xi_closed(xi.octonion(), v) - apply(q, v)));
        }
        report.add("translator closed form",
                   "Q_xi(v) = ((-1+i+xi+ixi)v + <v,xi+ixi>(1+i+xi+ixi))/2", closed,
                   1e-10, n_cf);
    }

    return report;
}

IdentityReport transition_suite(const SuiteConfig& cfg) {
    if (cfg.samples < 1) throw ConfigError("transition suite: samples must be >= 1");
    IdentityReport report;
    report.suite = "transition";
    report.seed = cfg.seed;
    Rng rng(cfg.seed);

    const std::size_t n = scaled(cfg, 1, 100);
    double embed_rt = 0, puttmann = 0, su3 = 0, annihilation = 0, frobenius = 0,
           antipodal = 0;
    for (std::size_t s = 0; s < n; ++s) {
        const EquatorPoint z = random_equator_point(rng);

        const EquatorPoint back = extract_equator(embed_equator(z));
        embed_rt = std::max({embed_rt, std::abs(back.u - z.u), std::abs(back.v - z.v),
                             std::abs(back.w - z.w)});

        const Matrix3c closed = theta_closed_form(z).matrix();
        puttmann = std::max(puttmann, max_abs_diff(closed, puttmann_form(z).matrix()));
        su3 = std::max(su3, (closed.adjoint() * closed - Matrix3c::Identity())
                                .cwiseAbs()
                                .maxCoeff());
        su3 = std::max(su3, std::abs(closed.determinant() - Complex(1.0)));

        const Matrix3c zzt = outer_zzt(z);
        const Matrix3c mz = m_z(z);
        annihilation = std::max({annihilation, (zzt * mz).cwiseAbs().maxCoeff(),
                                 (mz * zzt).cwiseAbs().maxCoeff()});
        frobenius = std::max(frobenius,
                             std::abs((zzt.conjugate().transpose() * mz.conjugate())
                                          .trace()));

        antipodal = std::max(antipodal, max_abs_diff(theta_closed_form(-z).matrix(),
                                                     zzt - mz.conjugate()));
    }
    report.add("embedding round trip", "extract . embed = id on S^5", embed_rt, 1e-14,
               n);
    report.add("structured form", "theta(z) = z z^t + conj(M_z)", puttmann, 1e-14, n);
    report.add("closed form special unitarity", "theta(z) lies in SU(3)", su3, 1e-10,
               n);
    report.add("annihilation", "z z^t M_z = M_z z z^t = 0", annihilation, 1e-14, n);
    report.add("Frobenius orthogonality", "tr(conj(z z^t)^t conj(M_z)) = 0", frobenius,
               1e-14, n);
    report.add("antipodal law", "theta(-z) = z z^t - conj(M_z)", antipodal, 1e-14, n);

    {
        const std::size_t n_q = scaled(cfg, 10, 100);
        double closed_form = 0, pipeline = 0;
        for (std::size_t s = 0; s < n_q; ++s) {
            const EquatorPoint z = random_equator_point(rng);
            const SpherePoint6 xi = embed_equator(z);
            Octonion v;
            do {
                v = Octonion{};
                for (int p = 2; p < 8; ++p) v[p] = rng.normal();
            } while (norm(v) < 1e-6);
            v = v * (1.0 / norm(v));

            const Octonion direct = apply(
                compose(inverse(translator_Q(-xi)), translator_Q(xi)), v);
            closed_form = std::max(
                closed_form, norm(q_composition_closed(xi.octonion(), v) - direct));
            pipeline = std::max(pipeline,
                                max_abs_diff(matrix_of_q_composition(z).matrix(),
                                             theta_closed_form(z).matrix()));
        }
        report.add("composition closed form",
                   "Q_{-xi}^-1 Q_xi(v) = v xi - <v xi,1>(1+xi) - <v xi,i>(1+xi)i",
                   closed_form, 1e-10, n_q);
        report.add("composition matrix", "the conjugation pipeline equals theta",
                   pipeline, 1e-10, n_q);
    }

    {
        const std::size_t n_t = scaled(cfg, 10, 50);
        double chart_match = 0;
        for (std::size_t s = 0; s < n_t; ++s) {
            const EquatorPoint z = random_equator_point(rng);
            const SU3Matrix t12 = transition_t12(embed_equator(z));
            chart_match = std::max(chart_match,
                                   max_abs_diff(theta_closed_form(z).matrix(),
                                                t12.matrix().transpose()));
        }
        report.add("chart transition agreement",
                   "closed form equals the transposed chart transition (see README)",
                   chart_match, cfg.tol_bundle, n_t);
    }

    {
        const DegreeReport deg = compute_degree({{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}},
                                                cfg.fd_step);
        report.add("mapping degree", "the first-column projection has degree 2",
                   std::abs(deg.degree - 2.0), 0.5, 2);
        const double sign_gap =
            std::abs(deg.preimages[0].sign - deg.preimages[1].sign);
        report.add("preimage signs", "both preimages carry the same sign", sign_gap,
                   0.5, 2);
    }

    return report;
}

std::vector<IdentityReport> all_suites(const SuiteConfig& cfg) {
    return {algebra_suite(cfg), g2_suite(cfg), charts_suite(cfg),
            transition_suite(cfg)};
}

} // namespace g2s6
