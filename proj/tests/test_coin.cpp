#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace qwalk;
using testutil::random_nontrivial_setup;
using testutil::random_setup;
using testutil::uniform;

namespace {

double unitarity_defect(const CoinMatrix& m) {
    // rows of C^dagger C against the identity
    const complexd e00 = std::conj(m.a) * m.a + std::conj(m.c) * m.c;
    const complexd e01 = std::conj(m.a) * m.b + std::conj(m.c) * m.d;
    const complexd e11 = std::conj(m.b) * m.b + std::conj(m.d) * m.d;
    return std::max({std::abs(e00 - 1.0), std::abs(e01), std::abs(e11 - 1.0)});
}

} // namespace

TEST_CASE("build_coin reproduces the canonical matrices") {
    const CoinMatrix id = build_coin(0.0, 0.0, 0.0);
    CHECK(std::abs(id.a - 1.0) < 1e-15);
    CHECK(std::abs(id.b) < 1e-15);
    CHECK(std::abs(id.c) < 1e-15);
    CHECK(std::abs(id.d - 1.0) < 1e-15);

    const CoinMatrix flip = build_coin(pi / 2, 0.0, 0.0);
    CHECK(std::abs(flip.a) < 1e-15);
    CHECK(std::abs(flip.b - 1.0) < 1e-15);
    CHECK(std::abs(flip.c + 1.0) < 1e-15);
    CHECK(std::abs(flip.d) < 1e-15);

    const double r = 1.0 / std::sqrt(2.0);
    const CoinMatrix rot = build_coin(pi / 4, 0.0, 0.0);
    CHECK(std::abs(rot.a - r) < 1e-15);
    CHECK(std::abs(rot.b - r) < 1e-15);
    CHECK(std::abs(rot.c + r) < 1e-15);
    CHECK(std::abs(rot.d - r) < 1e-15);
}

TEST_CASE("build_coin output is special-unitary") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 200; ++t) {
        const CoinSetup s = random_setup(rng);
        const CoinMatrix m = build_coin(s);
        CHECK(unitarity_defect(m) < 1e-14);
        CHECK(std::abs(m.a * m.d - m.b * m.c - 1.0) < 1e-14);
    }
}

TEST_CASE("build_coin_state canonical values and unit norm") {
    const CoinState up = build_coin_state(0.0, 1.7);
    CHECK(std::abs(up.alpha - 1.0) < 1e-15);
    CHECK(std::abs(up.beta) < 1e-15);

    const CoinState symmetric = build_coin_state(pi / 4, pi / 2);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(symmetric.alpha - r) < 1e-15);
    CHECK(std::abs(symmetric.beta - complexd(0.0, r)) < 1e-15);

    const CoinState down = build_coin_state(pi / 2, 0.0);
    CHECK(std::abs(down.alpha) < 1e-15);
    CHECK(std::abs(down.beta - 1.0) < 1e-15);

    std::mt19937_64 rng(102);
    for (int t = 0; t < 200; ++t) {
        const CoinState g = build_coin_state(uniform(rng, 0, pi / 2), uniform(rng, 0, two_pi));
        CHECK(std::abs(std::norm(g.alpha) + std::norm(g.beta) - 1.0) < 1e-14);
    }
}

TEST_CASE("angle domains are enforced") {
    CHECK_THROWS_AS(CoinSetup(-0.1, 0, 0, 0, 0), std::domain_error);
    CHECK_THROWS_AS(CoinSetup(two_pi, 0, 0, 0, 0), std::domain_error);
    CHECK_THROWS_AS(CoinSetup(1, pi, 0, 0, 0), std::domain_error);
    CHECK_THROWS_AS(CoinSetup(1, 0, -1e-9, 0, 0), std::domain_error);
    CHECK_THROWS_AS(CoinSetup(1, 0, 0, pi / 2 + 1e-9, 0), std::domain_error);
    CHECK_THROWS_AS(CoinSetup(1, 0, 0, 0, two_pi), std::domain_error);
    CHECK_THROWS_AS(build_coin(7.0, 0, 0), std::domain_error);
    CHECK_THROWS_AS(build_coin_state(2.0, 0), std::domain_error);
    CHECK_NOTHROW(CoinSetup(0, 0, 0, pi / 2, 0)); // varphi interval is closed
}

TEST_CASE("is_trivial") {
    CHECK(is_trivial(CoinSetup(0, 0, 0, 0, 0)));
    CHECK(is_trivial(CoinSetup(pi / 2, 0.3, 0.7, 0, 0)));
    CHECK(is_trivial(CoinSetup(pi, 0, 0, 0, 0)));
    CHECK(is_trivial(CoinSetup(3 * pi / 2, 0, 0, 0, 0)));
    CHECK_FALSE(is_trivial(CoinSetup(pi / 4, 0, 0, 0, 0)));
    CHECK_FALSE(is_trivial(CoinSetup(1.0, 0, 0, 0, 0)));
}

TEST_CASE("lambda_of canonical values") {
    CHECK(std::abs(lambda_of(CoinSetup(pi / 4, 0, 0, pi / 4, pi / 2))) < 1e-12);
    CHECK(std::abs(lambda_of(CoinSetup(pi / 4, 0, 0, 0.0, 0.0)) - 1.0) < 1e-12);

    // equal-lambda pair with phi_1 + phi_2 = theta
    const CoinSetup s1(1.2, 0, 0, 0.2, 0);
    const CoinSetup s2(1.2, 0, 0, 1.0, 0);
    const double expected = std::cos(0.4) + std::sin(0.4) * std::tan(1.2);
    CHECK(std::abs(lambda_of(s1) - expected) < 1e-12);
    CHECK(std::abs(lambda_of(s2) - expected) < 1e-12);
    CHECK(std::abs(lambda_of(s1) - lambda_of(s2)) < 1e-12);

    CHECK_THROWS_AS(lambda_of(CoinSetup(pi / 2, 0, 0, 0.3, 1.0)), singular_coin_error);
}

TEST_CASE("lambda_of respects the 1/cos(rho(theta)) bound") {
    std::mt19937_64 rng(103);
    for (int t = 0; t < 500; ++t) {
        const CoinSetup s = random_nontrivial_setup(rng);
        CHECK(std::abs(lambda_of(s)) <= 1.0 / std::cos(rho(s.theta())) + 1e-12);
    }
}

TEST_CASE("is_symmetric") {
    CHECK(is_symmetric(CoinSetup(pi / 4, 0, 0, pi / 4, pi / 2)));
    CHECK_FALSE(is_symmetric(CoinSetup(pi / 4, 0, 0, 0.0, pi / 2)));
    CHECK(is_symmetric(CoinSetup(0.0, 0, 0, pi / 4, 1.234))); // trivial coin, any xi
    CHECK_FALSE(is_symmetric(CoinSetup(pi / 4, 0, 0.5, pi / 4, pi / 2)));
}

TEST_CASE("symmetric setups have lambda 0") {
    std::mt19937_64 rng(104);
    for (int t = 0; t < 300; ++t) {
        const CoinSetup s = testutil::random_symmetric_setup(rng, 1e-3, pi / 2 - 1e-3);
        REQUIRE(is_symmetric(s));
        CHECK(std::abs(lambda_of(s)) < 1e-12);
    }
}

TEST_CASE("symmetric_coin_states solves the congruence") {
    const SymmetricCoinStates a = symmetric_coin_states(pi / 4, 0, 0);
    REQUIRE_FALSE(a.all_xi);
    CHECK(a.xi[0] == Catch::Approx(pi / 2).margin(1e-14));
    CHECK(a.xi[1] == Catch::Approx(3 * pi / 2).margin(1e-14));

    const SymmetricCoinStates b = symmetric_coin_states(pi / 4, 0, pi / 2);
    REQUIRE_FALSE(b.all_xi);
    CHECK(b.xi[0] == Catch::Approx(0.0).margin(1e-14));
    CHECK(b.xi[1] == Catch::Approx(pi).margin(1e-14));

    CHECK(symmetric_coin_states(pi / 2, 0, 0.3).all_xi);
}

TEST_CASE("symmetric_coin_states round-trips through is_symmetric") {
    std::mt19937_64 rng(105);
    for (int t = 0; t < 1000; ++t) {
        double theta;
        do {
            theta = uniform(rng, 0, two_pi);
        } while (coin_is_trivial(theta));
        const double phi1 = uniform(rng, 0, pi);
        const double phi2 = uniform(rng, 0, pi);
        const SymmetricCoinStates states = symmetric_coin_states(theta, phi1, phi2);
        REQUIRE_FALSE(states.all_xi);
        for (double xi : states.xi) {
            CHECK(xi >= 0.0);
            CHECK(xi < two_pi);
            CHECK(is_symmetric(CoinSetup(theta, phi1, phi2, pi / 4, xi)));
        }
    }
}
