#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace qwalk;
using testutil::random_nontrivial_setup;
using testutil::random_setup;
using testutil::random_symmetric_setup;
using testutil::uniform;

TEST_CASE("rho piecewise values") {
    CHECK(rho(0.3) == 0.3);
    CHECK(rho(2.0) == Catch::Approx(pi - 2.0).margin(1e-15));
    CHECK(rho(5.0) == Catch::Approx(two_pi - 5.0).margin(1e-15));
    CHECK(rho(4.0) == Catch::Approx(4.0 - pi).margin(1e-15));
    CHECK_THROWS_AS(rho(-0.1), std::domain_error);
    CHECK_THROWS_AS(rho(two_pi), std::domain_error);
}

TEST_CASE("rho folds into [0, pi/2] preserving cos^2 and sin^2") {
    for (int i = 0; i < 1000; ++i) {
        const double x = two_pi * i / 1000.0;
        const double r = rho(x);
        CHECK(r >= 0.0);
        CHECK(r <= pi / 2);
        CHECK(rho(r) == r);
        CHECK(std::abs(std::cos(r) * std::cos(r) - std::cos(x) * std::cos(x)) < 1e-14);
        CHECK(std::abs(std::sin(r) * std::sin(r) - std::sin(x) * std::sin(x)) < 1e-14);
    }
}

TEST_CASE("canonical_symmetric") {
    const CoinSetup hadamard_class(pi / 4, 0, 0, pi / 4, pi / 2);
    CHECK(canonical_symmetric(hadamard_class).theta == Catch::Approx(pi / 4).margin(1e-15));

    // symmetric setup with theta = 2.0 folds to pi - 2
    const SymmetricCoinStates states = symmetric_coin_states(2.0, 0.4, 1.1);
    const CoinSetup folded(2.0, 0.4, 1.1, pi / 4, states.xi[0]);
    const CanonicalSymmetric c = canonical_symmetric(folded);
    CHECK(c.theta == Catch::Approx(pi - 2.0).margin(1e-15));
    CHECK(distributions_equal_up_to(folded, representative(c), 12, 1e-10));

    CHECK_THROWS_AS(canonical_symmetric(CoinSetup(pi / 4, 0, 0, 0.1, 0.0)),
                    std::invalid_argument);
}

TEST_CASE("distinct symmetric classes are distinguishable at n = 2") {
    // p(2, 2) = cos^2(theta)/2 separates representatives
    const CoinSetup a = representative(CanonicalSymmetric{0.5});
    const CoinSetup b = representative(CanonicalSymmetric{0.9});
    const double pa = distribution(evolve(a, 2)).at(2);
    const double pb = distribution(evolve(b, 2)).at(2);
    CHECK(std::abs(pa - std::cos(0.5) * std::cos(0.5) / 2) < 1e-14);
    CHECK(std::abs(pb - std::cos(0.9) * std::cos(0.9) / 2) < 1e-14);
    CHECK(std::abs(pa - pb) > 1e-3);
    CHECK_FALSE(distributions_equal_up_to(a, b, 2, 1e-10));
}

TEST_CASE("canonical_distributional frozen example and idempotence") {
    const CanonicalTriple t = canonical_distributional(CoinSetup(1.2, 0, 0, 0.2, 0));
    CHECK(t.varphi == 0.2);
    CHECK(t.xi == 0.0);
    CHECK(t.theta == 1.2);

    // phi1 does not matter
    const CanonicalTriple u = canonical_distributional(CoinSetup(1.2, 0.9, 0, 0.2, 0));
    CHECK(u.varphi == t.varphi);
    CHECK(u.xi == t.xi);
    CHECK(u.theta == t.theta);

    std::mt19937_64 rng(501);
    for (int i = 0; i < 50; ++i) {
        const CanonicalTriple c = canonical_distributional(random_setup(rng));
        CHECK(c.theta >= 0.0);
        CHECK(c.theta <= pi / 2);
        CHECK(c.xi >= 0.0);
        CHECK(c.xi <= pi);
        const CanonicalTriple again = canonical_distributional(representative(c));
        CHECK(std::abs(again.varphi - c.varphi) < 1e-14);
        CHECK(std::abs(again.xi - c.xi) < 1e-14);
        CHECK(std::abs(again.theta - c.theta) < 1e-14);
    }
}

TEST_CASE("canonical_distributional preserves the distribution") {
    std::mt19937_64 rng(502);
    for (int i = 0; i < 30; ++i) {
        const CoinSetup s = random_setup(rng);
        CHECK(distributions_equal_up_to(s, representative(canonical_distributional(s)), 10,
                                        1e-10));
    }
}

TEST_CASE("canonical_asymptotic closed values") {
    // symmetric setup: lambda = 0 lands on the xi = 0 branch at pi/4 + theta/2
    const CoinSetup sym(0.8, 0, 0, pi / 4,
                        symmetric_coin_states(0.8, 0, 0).xi[0]);
    const AsymptoticTriple a = canonical_asymptotic(sym);
    CHECK(a.xi == 0.0);
    CHECK(a.theta == Catch::Approx(0.8).margin(1e-15));
    CHECK(a.varphi == Catch::Approx(pi / 4 + 0.4).margin(1e-12));

    // maximal lambda = 1/cos(theta) comes back at varphi = theta/2, xi = 0
    const CoinSetup max_tilt(pi / 4, 0, 0, pi / 8, 0);
    const AsymptoticTriple b = canonical_asymptotic(max_tilt);
    CHECK(b.xi == 0.0);
    CHECK(b.varphi == Catch::Approx(pi / 8).margin(1e-7));

    CHECK_THROWS_AS(canonical_asymptotic(CoinSetup(0.0, 0, 0, 0.3, 0)), no_limit_error);
}

TEST_CASE("canonical_asymptotic round-trips (theta, lambda) into the canonical region") {
    std::mt19937_64 rng(503);
    for (int i = 0; i < 50; ++i) {
        const CoinSetup s = random_nontrivial_setup(rng);
        const AsymptoticTriple a = canonical_asymptotic(s);
        const double theta_r = rho(s.theta());
        CHECK(a.theta == theta_r);
        CHECK(std::abs(lambda_of(representative(a)) - lambda_of(s)) < 1e-10);
        if (a.xi == 0.0) {
            CHECK(a.varphi >= theta_r / 2 - 1e-12);
            CHECK(a.varphi <= pi / 4 + theta_r / 2 + 1e-12);
        } else {
            CHECK(a.xi == pi);
            CHECK(a.varphi > pi / 4 - theta_r / 2 - 1e-12);
            CHECK(a.varphi <= (pi - theta_r) / 2 + 1e-12);
        }
    }
}

TEST_CASE("distinct asymptotic representatives carry distinct (theta, lambda)") {
    std::mt19937_64 rng(504);
    for (int i = 0; i < 100; ++i) {
        const CoinSetup s1 = random_nontrivial_setup(rng);
        const CoinSetup s2 = random_nontrivial_setup(rng);
        const AsymptoticTriple a1 = canonical_asymptotic(s1);
        const AsymptoticTriple a2 = canonical_asymptotic(s2);
        const bool same_triple = std::abs(a1.varphi - a2.varphi) < 1e-9 &&
                                 a1.xi == a2.xi && std::abs(a1.theta - a2.theta) < 1e-9;
        const bool same_class = std::abs(rho(s1.theta()) - rho(s2.theta())) < 1e-9 &&
                                std::abs(lambda_of(s1) - lambda_of(s2)) < 1e-9;
        if (same_triple) CHECK(same_class);
        if (!same_class) CHECK_FALSE(same_triple);
    }
}

TEST_CASE("distributions_equal_up_to") {
    const CoinSetup s(1.0, 0.2, 0.9, 0.6, 4.0);
    CHECK(distributions_equal_up_to(s, s, 12, 1e-10));
    CHECK_THROWS_AS(distributions_equal_up_to(s, s, 0, 1e-10), std::domain_error);
    CHECK_THROWS_AS(distributions_equal_up_to(s, s, 5, 0.0), std::domain_error);
}

TEST_CASE("equal lambda does not imply equal finite-step distributions") {
    const CoinSetup s1(1.2, 0, 0, 0.2, 0);
    const CoinSetup s2(1.2, 0, 0, 1.0, 0);
    CHECK(std::abs(lambda_of(s1) - lambda_of(s2)) < 1e-12);
    CHECK_FALSE(distributions_equal_up_to(s1, s2, 2, 1e-10));
    // the separation is macroscopic, not a tolerance artefact
    CHECK(distribution_gap_up_to(s1, s2, 2) == Catch::Approx(0.668604).margin(1e-4));
}

TEST_CASE("symmetry-condition solutions on a xi grid come in exact pairs") {
    std::mt19937_64 rng(505);
    const double spacing = 1e-3;
    for (int t = 0; t < 20; ++t) {
        double theta;
        do {
            theta = uniform(rng, 0, two_pi);
        } while (coin_is_trivial(theta));
        const double phi2 = uniform(rng, 0, pi);
        int hits = 0;
        for (int i = 0; i * spacing < two_pi; ++i)
            if (angle_distance(i * spacing, phi2 - pi / 2, pi) < spacing / 2) ++hits;
        CHECK(hits == 2);
    }
}
