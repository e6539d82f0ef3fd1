#pragma once

#include <array>
#include <functional>
#include <vector>

#include "qwalk/quantum_walk.hpp"

namespace qwalk {

/// Joint probability mass over (site, direction) for the correlated walk,
/// stored as dense up/down arrays over the window [-n, n].
struct ClassicalJointState {
    int n = 0;
    std::vector<double> up;
    std::vector<double> down;

    double up_at(int j) const {
        return (j < -n || j > n) ? 0.0 : up[static_cast<size_t>(j + n)];
    }
    double down_at(int j) const {
        return (j < -n || j > n) ? 0.0 : down[static_cast<size_t>(j + n)];
    }
    double total_mass() const {
        double s = 0.0;
        for (size_t i = 0; i < up.size(); ++i) s += up[i] + down[i];
        return s;
    }
};

/// Correlation coefficient plus initial direction pmf (q0_up, 1 - q0_up).
struct CorrelationParams {
    double delta;
    double q0_up;

    CorrelationParams(double delta_, double q0_up_) : delta(delta_), q0_up(q0_up_) {
        if (!(delta >= -1.0 && delta <= 1.0))
            throw std::domain_error("delta must lie in [-1, 1]");
        if (!(q0_up >= 0.0 && q0_up <= 1.0))
            throw std::domain_error("q0_up must lie in [0, 1]");
    }
    double q0_down() const { return 1.0 - q0_up; }
};

/// Doubly stochastic velocity transition matrix
/// [[(1+delta)/2, (1-delta)/2], [(1-delta)/2, (1+delta)/2]].
inline std::array<std::array<double, 2>, 2> transition_matrix(double delta) {
    if (!(delta >= -1.0 && delta <= 1.0))
        throw std::domain_error("delta must lie in [-1, 1]");
    const double keep = (1.0 + delta) / 2;
    const double flip = (1.0 - delta) / 2;
    return {{{keep, flip}, {flip, keep}}};
}

/// Direction update by the transition matrix, then up-mass shifts j -> j+1
/// and down-mass shifts j -> j-1.
inline ClassicalJointState step(const ClassicalJointState& state, double delta) {
    const auto m = transition_matrix(delta);
    const int w = state.n + 1;
    ClassicalJointState next{w, std::vector<double>(2 * w + 1), std::vector<double>(2 * w + 1)};
    for (int j = -w; j <= w; ++j) {
        next.up[static_cast<size_t>(j + w)] =
            m[0][0] * state.up_at(j - 1) + m[0][1] * state.down_at(j - 1);
        next.down[static_cast<size_t>(j + w)] =
            m[1][0] * state.up_at(j + 1) + m[1][1] * state.down_at(j + 1);
    }
    return next;
}

/// n-fold step from the centred initial distribution (all spatial mass at 0).
inline ClassicalJointState evolve(const CorrelationParams& params, int steps,
                                  const std::function<void(const ClassicalJointState&)>& per_step = {}) {
    if (steps < 0) throw std::domain_error("steps must be nonnegative");
    ClassicalJointState state{0, {params.q0_up}, {params.q0_down()}};
    for (int k = 0; k < steps; ++k) {
        state = step(state, params.delta);
        if (per_step) per_step(state);
    }
    return state;
}

/// Sum over the direction component, normalised like `distribution`.
inline SpatialDistribution marginal(const ClassicalJointState& state) {
    SpatialDistribution dist{state.n, std::vector<double>(state.up.size())};
    double total = 0.0;
    for (size_t i = 0; i < state.up.size(); ++i) {
        double p = state.up[i] + state.down[i];
        if (p < probability_clamp) p = 0.0;
        dist.pmf[i] = p;
        total += p;
    }
    if (total > 0.0)
        for (double& p : dist.pmf) p /= total;
    return dist;
}

/// Gillis's variance for the symmetric start q0 = (1/2, 1/2):
///   sigma^2 = ((1+delta)/(1-delta)) n - 2 delta (1 - delta^n) / (1-delta)^2.
/// delta = 1 is singular here; that walk obeys the exact n^2 law instead.
inline double gillis_variance(double delta, int steps) {
    if (!(delta >= -1.0 && delta < 1.0))
        throw std::domain_error(
            "gillis_variance requires delta in [-1, 1); delta = 1 follows the n^2 law");
    if (steps < 0) throw std::domain_error("steps must be nonnegative");
    const double n = static_cast<double>(steps);
    return (1.0 + delta) / (1.0 - delta) * n -
           2.0 * delta * (1.0 - std::pow(delta, steps)) / ((1.0 - delta) * (1.0 - delta));
}

} // namespace qwalk
