#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "qwalk/classify.hpp"
#include "qwalk/coin.hpp"
#include "qwalk/quantum_walk.hpp"

namespace qwalk {

/// Parameters of the limiting density: support half-width |a| = cos(theta)
/// and the asymmetry parameter lambda, constrained by |lambda| <= 1/|a| so
/// the density stays nonnegative on its support.
class LimitParams {
  public:
    LimitParams(double a_abs, double lambda) : a_abs_(a_abs), lambda_(lambda) {
        if (!(a_abs > 0.0 && a_abs < 1.0))
            throw std::domain_error("support half-width |a| must lie in (0, 1)");
        if (!(std::abs(lambda) <= 1.0 / a_abs + 1e-12)) {
            std::ostringstream msg;
            msg << "|lambda| = " << std::abs(lambda) << " exceeds the bound 1/|a| = "
                << 1.0 / a_abs << " (= 1/cos(theta))";
            throw std::domain_error(msg.str());
        }
    }

    /// Limiting density of the walk induced by `setup`. With the translation
    /// convention used here (spin-up steps right) the rescaled position drifts
    /// toward +1 for positive lambda_C, so the walk's density in the
    /// (1 - lambda x) parametrisation has lambda = -lambda_C.
    static LimitParams from_setup(const CoinSetup& setup) {
        if (is_trivial(setup))
            throw no_limit_error("trivial coins admit no limiting distribution");
        return {std::cos(rho(setup.theta())), -lambda_of(setup)};
    }

    double a_abs() const { return a_abs_; }
    double lambda() const { return lambda_; }

  private:
    double a_abs_, lambda_;
};

/// Limiting density
///   f(x) = sqrt(1-a^2) (1 - lambda x) / (pi (1-x^2) sqrt(a^2-x^2))
/// on (-a, a) and 0 elsewhere (endpoints included in the zero clause).
inline double density(const LimitParams& p, double x) {
    const double a = p.a_abs();
    if (std::abs(x) >= a) return 0.0;
    return std::sqrt(1.0 - a * a) * (1.0 - p.lambda() * x) /
           (pi * (1.0 - x * x) * std::sqrt(a * a - x * x));
}

namespace detail {

template <class F>
double simpson_segment(F&& f, double lo, double hi, double flo, double fmid, double fhi) {
    return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
}

template <class F>
double adaptive_simpson(F&& f, double lo, double hi, double flo, double fmid, double fhi,
                        double whole, double tol, int depth) {
    const double mid = (lo + hi) / 2;
    const double lq = (lo + mid) / 2;
    const double rq = (mid + hi) / 2;
    const double flq = f(lq);
    const double frq = f(rq);
    const double left = simpson_segment(f, lo, mid, flo, flq, fmid);
    const double right = simpson_segment(f, mid, hi, fmid, frq, fhi);
    const double diff = left + right - whole;
    if (std::abs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
    if (depth <= 0)
        throw numerical_error("adaptive quadrature did not converge within the refinement cap");
    return adaptive_simpson(f, lo, mid, flo, flq, fmid, left, tol / 2, depth - 1) +
           adaptive_simpson(f, mid, hi, fmid, frq, fhi, right, tol / 2, depth - 1);
}

template <class F>
double integrate(F&& f, double lo, double hi, double tol, int max_depth = 48) {
    if (!(lo < hi)) return 0.0;
    const double flo = f(lo);
    const double fhi = f(hi);
    const double fmid = f((lo + hi) / 2);
    const double whole = simpson_segment(f, lo, hi, flo, fmid, fhi);
    return adaptive_simpson(f, lo, hi, flo, fmid, fhi, whole, tol, max_depth);
}

/// Integrand after the substitution x = a sin(u), which removes the
/// inverse-square-root endpoint singularity: f(x) dx = g(u) du with
///   g(u) = sqrt(1-a^2) (1 - lambda a sin u) / (pi (1 - a^2 sin^2 u)).
inline auto substituted_density(const LimitParams& p) {
    const double a = p.a_abs();
    const double lambda = p.lambda();
    const double front = std::sqrt(1.0 - a * a) / pi;
    return [a, lambda, front](double u) {
        const double s = std::sin(u);
        return front * (1.0 - lambda * a * s) / (1.0 - a * a * s * s);
    };
}

} // namespace detail

/// Integral of the density over its support (1 up to quadrature tolerance).
inline double integrate_density(const LimitParams& p, double tol = 1e-9) {
    return detail::integrate(detail::substituted_density(p), -pi / 2, pi / 2, tol);
}

/// First moment of the density by the same substitution.
inline double limit_mean(const LimitParams& p, double tol = 1e-9) {
    const auto g = detail::substituted_density(p);
    const double a = p.a_abs();
    return detail::integrate([&](double u) { return a * std::sin(u) * g(u); }, -pi / 2,
                             pi / 2, tol);
}

/// CDF of the limiting distribution at x.
inline double limit_cdf(const LimitParams& p, double x, double tol = 1e-12) {
    const double a = p.a_abs();
    if (x <= -a) return 0.0;
    const double upper = x >= a ? pi / 2 : std::asin(x / a);
    return detail::integrate(detail::substituted_density(p), -pi / 2, upper, tol);
}

/// Kolmogorov-style sup distance between the rescaled empirical distribution
/// of j/n after n steps and the limiting CDF, evaluated at the empirical
/// jump points (both one-sided limits of the step function are compared).
inline double empirical_vs_limit(const CoinSetup& setup, int n) {
    if (n < 1) throw std::domain_error("empirical_vs_limit requires n >= 1");
    const LimitParams p = LimitParams::from_setup(setup);
    const SpatialDistribution dist = distribution(evolve(setup, n));
    const auto g = detail::substituted_density(p);
    const double a = p.a_abs();

    double sup = 0.0;
    double empirical_cdf = 0.0;
    double limit_acc = 0.0;
    double u_prev = -pi / 2;
    for (int j = -n; j <= n; j += 2) {
        const double mass = dist.at(j);
        const double x = static_cast<double>(j) / n;
        const double u = std::asin(std::clamp(x / a, -1.0, 1.0));
        if (u > u_prev) {
            limit_acc += detail::integrate(g, u_prev, u, 1e-12);
            u_prev = u;
        }
        sup = std::max(sup, std::abs(empirical_cdf - limit_acc)); // left limit
        empirical_cdf += mass;
        sup = std::max(sup, std::abs(empirical_cdf - limit_acc)); // right value
    }
    return sup;
}

/// Gaussian density of the sqrt(n)-rescaled classical walk: zero mean,
/// variance (1+delta)/(1-delta).
inline double classical_limit_density(double delta, double x) {
    if (!(delta > -1.0 && delta < 1.0))
        throw std::domain_error("classical limit requires delta in (-1, 1)");
    const double var = (1.0 + delta) / (1.0 - delta);
    return std::exp(-x * x / (2.0 * var)) / std::sqrt(2.0 * pi * var);
}

} // namespace qwalk
