#pragma once

#include <algorithm>
#include <cmath>

#include "qwalk/coin.hpp"
#include "qwalk/quantum_walk.hpp"

namespace qwalk {

/// Fold [0, 2 pi) onto [0, pi/2] preserving cos^2 and sin^2.
inline double rho(double x) {
    if (!(x >= 0.0 && x < two_pi)) throw std::domain_error("rho domain is [0, 2 pi)");
    if (x < pi / 2) return x;
    if (x < pi) return pi - x;
    if (x < 3 * pi / 2) return x - pi;
    return two_pi - x;
}

/// Representative parameter of a symmetric walk's distributional class.
struct CanonicalSymmetric {
    double theta; // in [0, pi/2]
};

/// Representative triple (varphi, xi, theta) of a distributional class.
struct CanonicalTriple {
    double varphi; // in [0, pi/2]
    double xi;     // in [0, pi]
    double theta;  // in [0, pi/2]
};

/// Representative triple of an asymptotic (limiting-distribution) class:
/// either (varphi, 0, theta) with varphi in [theta/2, pi/4 + theta/2], or
/// (varphi, pi, theta) with varphi in (pi/4 - theta/2, (pi - theta)/2].
struct AsymptoticTriple {
    double varphi;
    double xi;
    double theta;
};

inline CoinSetup representative(const CanonicalSymmetric& c) {
    return CoinSetup(c.theta, 0.0, 0.0, pi / 4, pi / 2);
}

inline CoinSetup representative(const CanonicalTriple& c) {
    return CoinSetup(c.theta, 0.0, 0.0, c.varphi, c.xi);
}

inline CoinSetup representative(const AsymptoticTriple& c) {
    return CoinSetup(c.theta, 0.0, 0.0, c.varphi, c.xi);
}

inline CanonicalSymmetric canonical_symmetric(const CoinSetup& setup) {
    if (!is_symmetric(setup))
        throw std::invalid_argument("canonical_symmetric requires a symmetric setup");
    return {rho(setup.theta())};
}

/// Canonical distributional representative. The distribution depends on the
/// coin state only through cos(xi - phi2) and on the coin through cos^2 and
/// cos*sin of theta, so xi is folded with cosine-preserving reflections and
/// flipped once more when the theta-fold changes the sign of cos*sin.
inline CanonicalTriple canonical_distributional(const CoinSetup& setup) {
    const double theta_r = rho(setup.theta());
    double u = wrap_two_pi(setup.xi() - setup.phi2());
    if (u > pi) u = two_pi - u;
    if (std::cos(setup.theta()) * std::sin(setup.theta()) < 0.0) u = pi - u;
    return {setup.varphi(), u, theta_r};
}

/// Canonical asymptotic representative: invert lambda on the xi = 0 branch
/// for lambda >= 0 and on the xi = pi branch otherwise, via
/// lambda = cos(2 varphi -/+ theta) / cos(theta).
inline AsymptoticTriple canonical_asymptotic(const CoinSetup& setup) {
    if (is_trivial(setup))
        throw no_limit_error("trivial coins admit no limiting distribution");
    const double theta_r = rho(setup.theta());
    const double lambda = lambda_of(setup);
    const double lhat = std::clamp(lambda * std::cos(theta_r), -1.0, 1.0);
    if (lambda >= 0.0) return {(theta_r + std::acos(lhat)) / 2, 0.0, theta_r};
    return {(std::acos(lhat) - theta_r) / 2, pi, theta_r};
}

/// sup over steps 1..n_max and all sites of |p1(j, n) - p2(j, n)|,
/// measured on directly evolved states.
inline double distribution_gap_up_to(const CoinSetup& s1, const CoinSetup& s2, int n_max) {
    if (n_max < 1) throw std::domain_error("n_max must be at least 1");
    const CoinMatrix c1 = build_coin(s1);
    const CoinMatrix c2 = build_coin(s2);
    WalkState w1 = initial_state(s1);
    WalkState w2 = initial_state(s2);
    double gap = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        w1 = step(w1, c1);
        w2 = step(w2, c2);
        const SpatialDistribution d1 = distribution(w1);
        const SpatialDistribution d2 = distribution(w2);
        for (int j = -n; j <= n; ++j) gap = std::max(gap, std::abs(d1.at(j) - d2.at(j)));
    }
    return gap;
}

inline bool distributions_equal_up_to(const CoinSetup& s1, const CoinSetup& s2, int n_max,
                                      double tol) {
    if (tol <= 0.0) throw std::domain_error("tolerance must be positive");
    return distribution_gap_up_to(s1, s2, n_max) <= tol;
}

} // namespace qwalk
