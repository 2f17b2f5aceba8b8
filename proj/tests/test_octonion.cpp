#include "doctest.h"

#include <cmath>
#include <sstream>

#include "g2s6/octonion.hpp"
#include "g2s6/random.hpp"
#include "g2s6/suites.hpp"
#include "oracles.hpp"

using namespace g2s6;

namespace {
double dist(const Octonion& a, const Octonion& b) { return norm(a - b); }
} // namespace

TEST_CASE("basis products") {
    const Octonion i = Octonion::i(), j = Octonion::j(), k = Octonion::k(),
                   e = Octonion::e(), f = Octonion::f(), g = Octonion::g(),
                   h = Octonion::h();

    CHECK(i * j == k);
    CHECK(e * e == -Octonion::one());
    CHECK(i * e == f);
    CHECK(j * e == g);
    CHECK(k * e == h);

    // f j = (ie)j evaluates through (i conj(j)) e = -(k e) = -h.
    CHECK((i * e) * j == -h);

    // the algebra is not associative: (ij)e = h while i(je) = -h.
    CHECK((i * j) * e == h);
    CHECK(i * (j * e) == -h);
}

TEST_CASE("table dump format") {
    const std::string dump = MultiplicationTable::standard().dump_string();
    std::istringstream is(dump);
    std::string line;
    int rows = 0;
    while (std::getline(is, line)) {
        ++rows;
        std::istringstream cells(line);
        std::string cell;
        int cols = 0;
        while (cells >> cell) {
            ++cols;
            CHECK((cell[0] == '+' || cell[0] == '-'));
            CHECK(std::string("1ijkefgh").find(cell.substr(1)) != std::string::npos);
        }
        CHECK(cols == 8);
    }
    CHECK(rows == 8);

    // first row and column are identity rows, diagonal squares are -1
    std::istringstream again(dump);
    std::getline(again, line);
    CHECK(line == "+1 +i +j +k +e +f +g +h");
    const auto& table = MultiplicationTable::standard();
    for (int p = 0; p < 8; ++p) {
        CHECK(table.cell[p][0].sign == 1);
        CHECK(table.cell[p][0].index == p);
        CHECK(table.cell[0][p].sign == 1);
        CHECK(table.cell[0][p].index == p);
        if (p >= 1) {
            CHECK(table.cell[p][p].sign == -1);
            CHECK(table.cell[p][p].index == 0);
        }
    }
}

TEST_CASE("table regeneration is exact") {
    CHECK(MultiplicationTable::from_doubling_rule() == MultiplicationTable::standard());
}

TEST_CASE("table product agrees with the doubling rule bit for bit") {
    Rng rng(2024);
    for (int s = 0; s < 5000; ++s) {
        const Octonion a = random_octonion(rng);
        const Octonion b = random_octonion(rng);
        const Octonion lhs = a * b;
        const Octonion rhs = testing::doubling_rule_mul(a, b);
        for (int p = 0; p < 8; ++p) CHECK(lhs[p] == rhs[p]);
    }
}

TEST_CASE("conjugation") {
    CHECK(conj(Octonion::one()) == Octonion::one());
    CHECK(conj(Octonion::i()) == -Octonion::i());
    const Octonion a(1, 1, 1, 1, 1, 1, 1, 1);
    CHECK(conj(a) == Octonion(1, -1, -1, -1, -1, -1, -1, -1));

    Rng rng(3);
    for (int s = 0; s < 1000; ++s) {
        const Octonion x = random_unit_octonion(rng);
        const Octonion y = random_unit_octonion(rng);
        CHECK(dist(conj(x * y), conj(y) * conj(x)) < 1e-12);
        CHECK(conj(conj(x)) == x);
        // conj(a) = 2 re(a) - a holds exactly
        CHECK(conj(x) == Octonion::one() * (2.0 * x[0]) - x);
    }
}

TEST_CASE("inner product and norm") {
    CHECK(inner(Octonion::i(), Octonion::j()) == 0.0);
    CHECK(inner(Octonion::e(), Octonion::e()) == 1.0);
    CHECK(norm(Octonion{}) == 0.0);
    CHECK(norm(Octonion(0, 1, 1, 0, 0, 0, 0, 0)) == doctest::Approx(std::sqrt(2.0)));

    Rng rng(4);
    for (int s = 0; s < 1000; ++s) {
        const Octonion a = random_unit_octonion(rng);
        const Octonion x = random_unit_octonion(rng);
        const Octonion y = random_unit_octonion(rng);
        CHECK(std::abs(norm(a * x) - norm(a) * norm(x)) < 1e-12);
        CHECK(dist((a * x) * conj(y) + (a * y) * conj(x), a * (2.0 * inner(x, y))) <
              1e-12);
    }
}

TEST_CASE("inverse") {
    CHECK(dist(inverse(Octonion::i()), -Octonion::i()) == 0.0);
    CHECK(dist(inverse(Octonion::one() * 2.0), Octonion::one() * 0.5) == 0.0);
    CHECK_THROWS_AS((void)inverse(Octonion{}), ZeroDivisor);

    Rng rng(5);
    for (int s = 0; s < 1000; ++s) {
        const Octonion r = random_unit_octonion(rng);
        CHECK(dist(r * inverse(r), Octonion::one()) < 1e-12);
        const Octonion x = random_unit_octonion(rng);
        // (rx)r^-1 = r(xr^-1)
        CHECK(dist((r * x) * inverse(r), r * (x * inverse(r))) < 1e-11);
    }
}

TEST_CASE("algebra suite passes") {
    SuiteConfig cfg;
    cfg.samples = 1000;
    cfg.seed = 42;
    const IdentityReport report = algebra_suite(cfg);
    for (const auto& check : report.checks) {
        INFO(check.name);
        CHECK(check.pass);
        if (check.sense == IdentityCheck::Sense::BelowTol)
            CHECK(check.residual < 1e-10);
    }
}

TEST_CASE("algebra suite rejects empty sampling") {
    SuiteConfig cfg;
    cfg.samples = 0;
    CHECK_THROWS_AS((void)algebra_suite(cfg), ConfigError);
}

TEST_CASE("corrupted table breaks the Moufang identity") {
    SuiteConfig cfg;
    cfg.samples = 200;
    cfg.seed = 42;
    const auto corrupted = MultiplicationTable::standard().with_flipped_sign(1, 2);
    const IdentityReport report = algebra_suite(cfg, corrupted);
    bool found = false;
    for (const auto& check : report.checks) {
        if (check.name == "Moufang identity") {
            found = true;
            CHECK_FALSE(check.pass);
            CHECK(check.residual >= 1.0);
        }
        if (check.name == "table regeneration") CHECK_FALSE(check.pass);
    }
    CHECK(found);
}
