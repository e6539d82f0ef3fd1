#pragma once

#include <array>
#include <complex>
#include <sstream>

#include "qwalk/angles.hpp"
#include "qwalk/errors.hpp"

namespace qwalk {

using complexd = std::complex<double>;

namespace detail {

inline void require_range(double value, double lo, double hi, bool hi_inclusive,
                          const char* name) {
    bool ok = value >= lo && (hi_inclusive ? value <= hi : value < hi);
    if (!ok) {
        std::ostringstream msg;
        msg << name << " = " << value << " outside [" << lo << ", " << hi
            << (hi_inclusive ? "]" : ")");
        throw std::domain_error(msg.str());
    }
}

} // namespace detail

/// The five angles (theta, phi1, phi2, varphi, xi) that fully specify a coined
/// walk: a special-unitary coin in Hopf coordinates plus an initial coin state.
/// The constructor rejects out-of-range angles.
class CoinSetup {
  public:
    CoinSetup(double theta, double phi1, double phi2, double varphi, double xi)
        : theta_(theta), phi1_(phi1), phi2_(phi2), varphi_(varphi), xi_(xi) {
        detail::require_range(theta, 0.0, two_pi, false, "theta");
        detail::require_range(phi1, 0.0, pi, false, "phi1");
        detail::require_range(phi2, 0.0, pi, false, "phi2");
        detail::require_range(varphi, 0.0, pi / 2, true, "varphi");
        detail::require_range(xi, 0.0, two_pi, false, "xi");
    }

    double theta() const { return theta_; }
    double phi1() const { return phi1_; }
    double phi2() const { return phi2_; }
    double varphi() const { return varphi_; }
    double xi() const { return xi_; }

    bool operator==(const CoinSetup&) const = default;

  private:
    double theta_, phi1_, phi2_, varphi_, xi_;
};

/// 2x2 special-unitary coin, entries [[a, b], [c, d]].
struct CoinMatrix {
    complexd a, b, c, d;
};

/// Initial coin state (alpha, beta) with |alpha|^2 + |beta|^2 = 1.
struct CoinState {
    complexd alpha, beta;
};

/// Coin in Hopf coordinates:
///   a = cos(theta) e^{i(phi1+phi2)/2},  b = sin(theta) e^{i(phi1-phi2)/2},
///   c = -sin(theta) e^{-i(phi1-phi2)/2}, d = cos(theta) e^{-i(phi1+phi2)/2}.
inline CoinMatrix build_coin(double theta, double phi1, double phi2) {
    detail::require_range(theta, 0.0, two_pi, false, "theta");
    detail::require_range(phi1, 0.0, pi, false, "phi1");
    detail::require_range(phi2, 0.0, pi, false, "phi2");
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double sum_half = (phi1 + phi2) / 2;
    const double diff_half = (phi1 - phi2) / 2;
    return {c * std::polar(1.0, sum_half), s * std::polar(1.0, diff_half),
            -s * std::polar(1.0, -diff_half), c * std::polar(1.0, -sum_half)};
}

inline CoinMatrix build_coin(const CoinSetup& setup) {
    return build_coin(setup.theta(), setup.phi1(), setup.phi2());
}

/// Coin state (cos(varphi), sin(varphi) e^{i xi}); global phase fixed.
inline CoinState build_coin_state(double varphi, double xi) {
    detail::require_range(varphi, 0.0, pi / 2, true, "varphi");
    detail::require_range(xi, 0.0, two_pi, false, "xi");
    return {complexd(std::cos(varphi), 0.0), std::sin(varphi) * std::polar(1.0, xi)};
}

inline CoinState build_coin_state(const CoinSetup& setup) {
    return build_coin_state(setup.varphi(), setup.xi());
}

/// A coin is trivial iff a*b*c*d = 0, i.e. theta is congruent to a multiple of
/// pi/2 (within the angular tolerance).
inline bool coin_is_trivial(double theta) {
    return congruent(theta, 0.0, pi / 2);
}

inline bool is_trivial(const CoinSetup& setup) { return coin_is_trivial(setup.theta()); }

/// True when the coin column |a| vanishes (theta congruent to pi/2 mod pi).
inline bool coin_is_singular(double theta) {
    return congruent(theta, pi / 2, pi);
}

/// Asymmetry parameter of the limiting density:
///   lambda = |alpha|^2 - |beta|^2 + 2 Re(a alpha conj(b beta)) / |a|^2.
/// For representatives with real coefficients this reduces to
/// cos(2 varphi) + sin(2 varphi) tan(theta) cos(xi).
inline double lambda_of(const CoinSetup& setup) {
    if (coin_is_singular(setup.theta()))
        throw singular_coin_error("lambda undefined: coin has |a| = 0 (theta = pi/2 mod pi)");
    const CoinMatrix coin = build_coin(setup);
    const CoinState state = build_coin_state(setup);
    const double diag = std::norm(state.alpha) - std::norm(state.beta);
    const double cross =
        2.0 * std::real(coin.a * state.alpha * std::conj(coin.b * state.beta));
    return diag + cross / std::norm(coin.a);
}

/// Symmetric in distribution iff |alpha| = |beta| = 1/sqrt(2) (varphi = pi/4)
/// and, for non-trivial coins, phi2 == pi/2 + xi (mod pi). Trivial coins admit
/// every xi. `tol` is the angular comparison tolerance.
inline bool is_symmetric(const CoinSetup& setup, double tol = angle_tolerance) {
    if (std::abs(setup.varphi() - pi / 4) > tol) return false;
    if (is_trivial(setup)) return true;
    return congruent(setup.phi2(), pi / 2 + setup.xi(), pi, tol);
}

/// Result of solving the symmetry condition in xi for a fixed coin. For a
/// non-trivial coin there are exactly two solutions in [0, 2 pi); for a
/// trivial coin every xi works (varphi = pi/4 in both cases).
struct SymmetricCoinStates {
    bool all_xi = false;
    std::array<double, 2> xi{0.0, 0.0};
};

inline SymmetricCoinStates symmetric_coin_states(double theta, double phi1, double phi2) {
    detail::require_range(theta, 0.0, two_pi, false, "theta");
    detail::require_range(phi1, 0.0, pi, false, "phi1");
    detail::require_range(phi2, 0.0, pi, false, "phi2");
    if (coin_is_trivial(theta)) return {true, {0.0, 0.0}};
    const double base = wrap_pi(phi2 - pi / 2);
    return {false, {base, base + pi}};
}

} // namespace qwalk
