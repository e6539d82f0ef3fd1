#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

/// Probabilities numerically below this are treated as exact zeros.
inline constexpr double probability_clamp = 1e-15;

/// Spinor amplitudes on the reachable window [-n, n] after n steps.
/// Site j lives at index j + n; sites with j != n (mod 2) stay zero.
struct WalkState {
    int n = 0;
    std::vector<complexd> alpha; // spin-up amplitudes
    std::vector<complexd> beta;  // spin-down amplitudes

    complexd alpha_at(int j) const {
        return (j < -n || j > n) ? complexd{} : alpha[static_cast<size_t>(j + n)];
    }
    complexd beta_at(int j) const {
        return (j < -n || j > n) ? complexd{} : beta[static_cast<size_t>(j + n)];
    }

    /// Total probability mass (1 up to roundoff for unitary evolution).
    double total_norm() const {
        double s = 0.0;
        for (size_t i = 0; i < alpha.size(); ++i) s += std::norm(alpha[i]) + std::norm(beta[i]);
        return s;
    }
};

/// Normalised probability mass over lattice sites at a fixed step.
struct SpatialDistribution {
    int n = 0;
    std::vector<double> pmf; // window [-n, n], index j + n

    double at(int j) const {
        return (j < -n || j > n) ? 0.0 : pmf[static_cast<size_t>(j + n)];
    }
};

/// State at n = 0: the coin state sitting at the origin.
inline WalkState initial_state(const CoinSetup& setup) {
    const CoinState gamma = build_coin_state(setup);
    return {0, {gamma.alpha}, {gamma.beta}};
}

/// One application of the walk operator:
///   alpha'_j = a alpha_{j-1} + b beta_{j-1},  beta'_j = c alpha_{j+1} + d beta_{j+1}.
inline WalkState step(const WalkState& state, const CoinMatrix& coin) {
    const int m = state.n + 1;
    WalkState next{m, std::vector<complexd>(2 * m + 1), std::vector<complexd>(2 * m + 1)};
    for (int j = -m; j <= m; ++j) {
        next.alpha[static_cast<size_t>(j + m)] =
            coin.a * state.alpha_at(j - 1) + coin.b * state.beta_at(j - 1);
        next.beta[static_cast<size_t>(j + m)] =
            coin.c * state.alpha_at(j + 1) + coin.d * state.beta_at(j + 1);
    }
    return next;
}

/// n-fold application of `step` starting from `initial_state`. The callback,
/// when given, sees the state after every step (variance scans need each n).
inline WalkState evolve(const CoinSetup& setup, int steps,
                        const std::function<void(const WalkState&)>& per_step = {}) {
    if (steps < 0) throw std::domain_error("steps must be nonnegative");
    const CoinMatrix coin = build_coin(setup);
    WalkState state = initial_state(setup);
    for (int k = 0; k < steps; ++k) {
        state = step(state, coin);
        if (per_step) per_step(state);
    }
    return state;
}

/// pmf(j) = |alpha_j|^2 + |beta_j|^2, clamped below `probability_clamp` and
/// renormalised.
inline SpatialDistribution distribution(const WalkState& state) {
    SpatialDistribution dist{state.n, std::vector<double>(state.alpha.size())};
    double total = 0.0;
    for (size_t i = 0; i < state.alpha.size(); ++i) {
        double p = std::norm(state.alpha[i]) + std::norm(state.beta[i]);
        if (p < probability_clamp) p = 0.0;
        dist.pmf[i] = p;
        total += p;
    }
    if (total > 0.0)
        for (double& p : dist.pmf) p /= total;
    return dist;
}

/// First moment. Accumulated in extended precision so that the exact lattice
/// identities (e.g. the theta = 0 variance law) survive rounding.
inline double mean(const SpatialDistribution& dist) {
    long double m = 0.0L;
    for (int j = -dist.n; j <= dist.n; ++j)
        m += static_cast<long double>(j) * dist.at(j);
    return static_cast<double>(m);
}

inline double variance(const SpatialDistribution& dist) {
    long double m1 = 0.0L, m2 = 0.0L;
    for (int j = -dist.n; j <= dist.n; ++j) {
        const long double p = dist.at(j);
        m1 += static_cast<long double>(j) * p;
        m2 += static_cast<long double>(j) * j * p;
    }
    return static_cast<double>(m2 - m1 * m1);
}

} // namespace qwalk
