#include "doctest.h"

#include <cmath>

#include "g2s6/degree.hpp"

using namespace g2s6;

TEST_CASE("tangent bases are orthonormal and positively oriented") {
    Rng rng(31);
    for (int s = 0; s < 200; ++s) {
        Vector6 p;
        for (int n = 0; n < 6; ++n) p[n] = rng.normal();
        p.normalize();

        const auto basis = tangent_basis(p);
        for (int m = 0; m < 5; ++m) {
            CHECK(std::abs(basis[m].dot(p)) < 1e-14);
            for (int n = 0; n < 5; ++n)
                CHECK(std::abs(basis[m].dot(basis[n]) - (m == n ? 1.0 : 0.0)) < 1e-13);
        }
        Eigen::Matrix<double, 6, 6> full;
        full.col(0) = p;
        for (int n = 0; n < 5; ++n) full.col(n + 1) = basis[n];
        CHECK(full.determinant() > 0.0);
    }
}

TEST_CASE("first column map") {
    Vector6 z;
    z << 1, 0, 0, 0, 0, 0;
    const Vector6 img = pi_theta(z);
    CHECK((img - z).norm() == 0.0);
}

TEST_CASE("degree at the canonical regular value") {
    const DegreeReport report = compute_degree();
    CHECK(report.degree == 2);
    REQUIRE(report.preimages.size() == 2);
    CHECK(report.preimages[0].sign == report.preimages[1].sign);

    // preimages are exactly +-(1,0,0)
    Vector6 plus;
    plus << 1, 0, 0, 0, 0, 0;
    CHECK((report.preimages[0].point - plus).norm() == 0.0);
    CHECK((report.preimages[1].point + plus).norm() == 0.0);

    // the chart Jacobian determinant is 8 at both preimages
    CHECK(report.preimages[0].jacobian_det == doctest::Approx(8.0).epsilon(1e-6));
    CHECK(report.preimages[1].jacobian_det == doctest::Approx(8.0).epsilon(1e-6));
}

TEST_CASE("degree is robust to the difference step") {
    CHECK(degree_pi_theta({{1, 0}, {0, 0}, {0, 0}}, 1e-3) == 2);
    CHECK(degree_pi_theta({{1, 0}, {0, 0}, {0, 0}}, 1e-6) == 2);
}

TEST_CASE("degree at a perturbed regular value") {
    EquatorPoint value{{0.99, 0.01}, {0.03, -0.02}, {0.025, 0.015}};
    const double n = std::sqrt(value.norm_sq());
    value = {value.u / n, value.v / n, value.w / n};

    const DegreeReport report = compute_degree(value);
    CHECK(report.degree == 2);
    for (const auto& p : report.preimages) {
        CHECK((pi_theta(p.point) - to_vector6(value)).norm() < 1e-9);
        CHECK(std::abs(p.point.norm() - 1.0) < 1e-12);
    }
    CHECK((report.preimages[0].point - report.preimages[1].point).norm() > 1e-3);
}

TEST_CASE("degree rejects bad values") {
    CHECK_THROWS_AS((void)compute_degree({{2, 0}, {0, 0}, {0, 0}}), NotUnit);
}
