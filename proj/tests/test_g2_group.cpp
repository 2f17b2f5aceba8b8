#include "doctest.h"

#include <cmath>

#include "g2s6/charts.hpp"
#include "g2s6/g2_element.hpp"
#include "g2s6/suites.hpp"

using namespace g2s6;

TEST_CASE("triple (i, j, e) is the identity") {
    const G2Element id = G2Element::from_triple(
        SpherePoint6::unit_i(), SpherePoint6::unit_j(), SpherePoint6::unit_e());
    CHECK((id.matrix() - Matrix7::Identity()).cwiseAbs().maxCoeff() == 0.0);
    const Octonion x(0.3, -1.2, 0.5, 2.0, 0.1, -0.7, 0.9, 0.4);
    CHECK(norm(apply(id, x) - x) == 0.0);
}

TEST_CASE("swapped triple (j, i, e) is a valid automorphism") {
    const G2Element g = G2Element::from_triple(
        SpherePoint6::unit_j(), SpherePoint6::unit_i(), SpherePoint6::unit_e());
    CHECK(norm(apply(g, Octonion::i()) - Octonion::j()) == 0.0);
    CHECK(norm(apply(g, Octonion::j()) - Octonion::i()) == 0.0);
    CHECK(norm(apply(g, Octonion::e()) - Octonion::e()) == 0.0);
    CHECK(multiplicativity_residual(g.matrix()) < 1e-12);
}

TEST_CASE("triple (i, j, f) sends e to f and g to jf") {
    const G2Element g = G2Element::from_triple(
        SpherePoint6::unit_i(), SpherePoint6::unit_j(), SpherePoint6::axis(5));
    CHECK(norm(apply(g, Octonion::e()) - Octonion::f()) == 0.0);
    CHECK(norm(apply(g, Octonion::g()) - Octonion::j() * Octonion::f()) == 0.0);
    CHECK(norm(apply(g, Octonion::g()) - Octonion::h()) == 0.0);
    CHECK(multiplicativity_residual(g.matrix()) < 1e-12);
}

TEST_CASE("non-orthogonal triples are rejected") {
    CHECK_THROWS_AS((void)G2Element::from_triple(SpherePoint6::unit_i(),
                                                 SpherePoint6::unit_i(),
                                                 SpherePoint6::unit_e()),
                    OrthogonalityViolation);
    // zeta = k is orthogonal to i and j but equals xi eta
    CHECK_THROWS_AS((void)G2Element::from_triple(SpherePoint6::unit_i(),
                                                 SpherePoint6::unit_j(),
                                                 SpherePoint6::axis(3)),
                    OrthogonalityViolation);
}

TEST_CASE("group structure") {
    Rng rng(11);
    for (int s = 0; s < 30; ++s) {
        const G2Element g = random_g2(rng);
        const G2Element h = random_g2(rng);

        CHECK(orthogonality_residual(g.matrix()) < 1e-12);
        CHECK(std::abs(g.matrix().determinant() - 1.0) < 1e-9);
        CHECK(multiplicativity_residual(g.matrix()) < 1e-12);

        const G2Element gh = compose(g, h);
        const Octonion x = random_unit_octonion(rng);
        const Octonion y = random_unit_octonion(rng);
        CHECK(norm(apply(gh, x) - apply(g, apply(h, x))) < 1e-13);
        CHECK(norm(apply(g, x * y) - apply(g, x) * apply(g, y)) < 1e-13);

        CHECK((compose(g, inverse(g)).matrix() - Matrix7::Identity())
                  .cwiseAbs()
                  .maxCoeff() < 1e-10);
        CHECK((compose(g, G2Element::identity()).matrix() - g.matrix())
                  .cwiseAbs()
                  .maxCoeff() == 0.0);

        // the stored triple records the images of (i, j, e)
        CHECK(norm(apply(g, Octonion::i()) - g.xi().octonion()) == 0.0);
        CHECK(norm(apply(g, Octonion::j()) - g.eta().octonion()) == 0.0);
        CHECK(norm(apply(g, Octonion::e()) - g.zeta().octonion()) == 0.0);
    }
}

TEST_CASE("random elements are reproducible and seed-sensitive") {
    const G2Element a = random_g2(std::uint64_t{123});
    const G2Element b = random_g2(std::uint64_t{123});
    const G2Element c = random_g2(std::uint64_t{124});
    CHECK((a.matrix() - b.matrix()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a.matrix() - c.matrix()).cwiseAbs().maxCoeff() > 1e-6);
}

TEST_CASE("inner automorphisms") {
    SUBCASE("half-real unit octonion is admissible") {
        const Octonion r(0.5, 0.5, 0.5, 0.5, 0, 0, 0, 0);
        const G2Element g = inner_automorphism(r);
        CHECK(multiplicativity_residual(g.matrix()) < 1e-10);
    }
    SUBCASE("real octonions are rejected") {
        CHECK_THROWS_AS((void)inner_automorphism(Octonion::one()),
                        NotInnerAutomorphism);
    }
    SUBCASE("zero is rejected") {
        CHECK_THROWS_AS((void)inner_automorphism(Octonion{}), ZeroDivisor);
    }
    SUBCASE("r = i fails the criterion and multiplicativity") {
        CHECK_THROWS_AS((void)inner_automorphism(Octonion::i()),
                        NotInnerAutomorphism);
        // the raw conjugation by i really is not multiplicative on (j, e)
        const Matrix7 m = conjugation_matrix(Octonion::i());
        const Octonion lhs = apply(m, Octonion::j() * Octonion::e());
        const Octonion rhs = apply(m, Octonion::j()) * apply(m, Octonion::e());
        CHECK(norm(lhs - rhs) > 1e-3);
    }
    SUBCASE("scale invariance of the criterion") {
        const Octonion r(0.5, 0.5, 0.5, 0.5, 0, 0, 0, 0);
        CHECK(inner_automorphism_criterion(r * 3.0) ==
              doctest::Approx(inner_automorphism_criterion(r)));
    }
}

TEST_CASE("J-equivariance") {
    const double id_res = j_equivariance_residual(G2Element::identity(), 200, 5);
    CHECK(id_res == 0.0);

    Rng rng(6);
    const G2Element g = random_g2(rng);
    CHECK(j_equivariance_residual(g.matrix(), 500, rng) < 1e-12);

    Rng nrng(7);
    const double control = j_equivariance_residual(j_swap_control(), 500, nrng);
    CHECK(control >= 0.1);
}

TEST_CASE("json round trip") {
    const G2Element g = random_g2(std::uint64_t{77});
    const nlohmann::json j = g.to_json();
    CHECK(j.contains("matrix"));
    CHECK(j["triple"]["xi"].size() == 7);
    const G2Element back = G2Element::from_json(j);
    CHECK((back.matrix() - g.matrix()).cwiseAbs().maxCoeff() == 0.0);

    const SpherePoint6 xi = g.xi();
    const SpherePoint6 xi_back = SpherePoint6::from_json(xi.to_json());
    CHECK(norm(xi_back.octonion() - xi.octonion()) == 0.0);
}

TEST_CASE("j-equivariance report") {
    const IdentityReport report =
        check_j_equivariance(random_g2(std::uint64_t{99}), 200, 4);
    REQUIRE(report.checks.size() == 1);
    CHECK(report.checks[0].pass);
    CHECK(report.checks[0].residual < 1e-12);
}

TEST_CASE("g2 suite passes") {
    SuiteConfig cfg;
    cfg.samples = 500;
    cfg.seed = 42;
    const IdentityReport report = g2_suite(cfg);
    for (const auto& check : report.checks) {
        INFO(check.name);
        CHECK(check.pass);
    }
}
