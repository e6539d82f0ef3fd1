#pragma once

#include <complex>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "qwalk/classical_walk.hpp"
#include "qwalk/quantum_walk.hpp"

namespace qwalk {

using bigint = boost::multiprecision::cpp_int;

/// Closed-form amplitude tables share layout and invariants with WalkState.
using AmplitudeTable = WalkState;

namespace detail {

inline bigint binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    bigint result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i; // exact at every step
    }
    return result;
}

} // namespace detail

/// Combinatorial prefactor
///   kappa(n, j, h) = ((n+h)/2)! / [((n-h)/2)! ((h-j)/2)! ((h+j)/2)!],
/// zero by convention whenever an index combination leaves the valid domain
/// (negative or odd half-integers). Exact integer arithmetic throughout.
inline bigint kappa(int n, int j, int h) {
    if (h < 0 || h > n) return 0;
    if ((n - h) % 2 != 0) return 0;
    if (((h - j) % 2 + 2) % 2 != 0) return 0;
    const int p = (n - h) / 2;
    const int q = (h - j) / 2;
    const int r = (h + j) / 2;
    if (q < 0 || r < 0) return 0;
    return detail::binomial(p + q + r, p) * detail::binomial(q + r, q);
}

/// Characteristic-polynomial data chi(x) = x^2 - c0 x - c1 together with the
/// sequence f_0 .. f_n obeying f_k = c0 f_{k-1} + c1 f_{k-2}, f_0 = 1, f_1 = c0.
struct FHCoefficients {
    complexd c0, c1;
    std::vector<complexd> f;
};

inline FHCoefficients fib_horner(complexd c0, complexd c1, int n) {
    if (n < 0) throw std::domain_error("fib_horner requires n >= 0");
    FHCoefficients out{c0, c1, {}};
    out.f.reserve(static_cast<size_t>(n) + 1);
    out.f.emplace_back(1.0, 0.0);
    if (n >= 1) out.f.push_back(c0);
    for (int k = 2; k <= n; ++k)
        out.f.push_back(c0 * out.f[static_cast<size_t>(k - 1)] +
                        c1 * out.f[static_cast<size_t>(k - 2)]);
    return out;
}

struct Mat2c {
    complexd m00, m01, m10, m11;
};

inline Mat2c operator*(const Mat2c& x, const Mat2c& y) {
    return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
            x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
}

/// A^n = f_n I + f_{n-1} (A - c0 I) with c0 = tr A, c1 = -det A.
inline Mat2c matrix_power_fh(const Mat2c& a, int n) {
    if (n < 0) throw std::domain_error("matrix_power_fh requires n >= 0");
    if (n == 0) return {1.0, 0.0, 0.0, 1.0};
    const complexd trace = a.m00 + a.m11;
    const complexd det = a.m00 * a.m11 - a.m01 * a.m10;
    const FHCoefficients fh = fib_horner(trace, -det, n);
    const complexd fn = fh.f[static_cast<size_t>(n)];
    const complexd fp = fh.f[static_cast<size_t>(n - 1)];
    return {fn + fp * (a.m00 - trace), fp * a.m01, fp * a.m10, fn + fp * (a.m11 - trace)};
}

namespace detail {

// The amplitude sums mix kappa values of order C(n, n/2) with alternating
// signs; the result is O(1), so double precision loses ~1e-8 absolute near
// theta = 0 already at n = 30. The sums are therefore accumulated in
// quadruple precision and rounded once at the end.
using quad = boost::multiprecision::cpp_bin_float_quad;

struct quad_complex {
    quad re{0}, im{0};
};

inline quad_complex qc_polar(const quad& angle) {
    return {cos(angle), sin(angle)};
}
inline quad_complex qc_mul(const quad_complex& x, const quad_complex& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}
inline quad_complex qc_scale(const quad& s, const quad_complex& x) {
    return {s * x.re, s * x.im};
}
inline quad_complex qc_add(const quad_complex& x, const quad_complex& y) {
    return {x.re + y.re, x.im + y.im};
}
inline complexd qc_round(const quad_complex& x) {
    return {x.re.convert_to<double>(), x.im.convert_to<double>()};
}

inline int alternating_sign(int half_exponent) {
    return half_exponent % 2 == 0 ? 1 : -1;
}

inline quad kappa_q(int n, int j, int h) {
    return kappa(n, j, h).convert_to<quad>();
}

} // namespace detail

/// Amplitudes after n steps from the three kappa-weighted sums (the closed
/// form of the walk state, derived through the Fourier / Fibonacci-Horner
/// route). Agrees with direct evolution to well below 1e-10 per amplitude.
inline AmplitudeTable quantum_amplitudes_closed(const CoinSetup& setup, int n) {
    using detail::quad;
    using detail::quad_complex;
    if (n < 0) throw std::domain_error("quantum_amplitudes_closed requires n >= 0");

    const quad th = quad(setup.theta());
    const quad ct = cos(th);
    const quad st = sin(th);
    const quad half_sum = (quad(setup.phi1()) + quad(setup.phi2())) / 2;
    const quad half_diff = (quad(setup.phi1()) - quad(setup.phi2())) / 2;
    const quad vphi = quad(setup.varphi());
    const quad xi = quad(setup.xi());
    const quad_complex alpha0{cos(vphi), quad(0)};
    const quad_complex beta0{sin(vphi) * cos(xi), sin(vphi) * sin(xi)};

    std::vector<quad> cos_pow(static_cast<size_t>(n) + 2);
    cos_pow[0] = 1;
    for (size_t h = 1; h < cos_pow.size(); ++h) cos_pow[h] = cos_pow[h - 1] * ct;

    AmplitudeTable table{n, std::vector<complexd>(static_cast<size_t>(2 * n) + 1),
                         std::vector<complexd>(static_cast<size_t>(2 * n) + 1)};

    for (int j = -n; j <= n; j += 2) {
        // same-spin sums (coefficient of the incoming alpha for alpha_j, beta for beta_j)
        quad sum_aa = 0, sum_bb = 0, cross_a = 0, cross_b = 0;
        for (int h = n % 2; h <= n; h += 2)
            sum_aa += detail::kappa_q(n, j, h) *
                      detail::alternating_sign((n - h) / 2) * cos_pow[static_cast<size_t>(h)];
        sum_bb = sum_aa;
        for (int h = ((n - 1) % 2 + 2) % 2; h <= n - 1; h += 2) {
            const quad drop = quad(detail::alternating_sign((n + 1 - h) / 2)) *
                              cos_pow[static_cast<size_t>(h) + 1];
            sum_aa += detail::kappa_q(n - 1, j + 1, h) * drop;
            sum_bb += detail::kappa_q(n - 1, j - 1, h) * drop;
            const quad keep = quad(detail::alternating_sign((n - 1 - h) / 2)) *
                              cos_pow[static_cast<size_t>(h)];
            cross_a += detail::kappa_q(n - 1, j - 1, h) * keep;
            cross_b += detail::kappa_q(n - 1, j + 1, h) * keep;
        }

        const quad_complex alpha_j = detail::qc_add(
            detail::qc_mul(detail::qc_polar(quad(j) * half_sum),
                           detail::qc_scale(sum_aa, alpha0)),
            detail::qc_mul(detail::qc_polar(quad(j - 1) * half_sum + half_diff),
                           detail::qc_scale(st * cross_a, beta0)));
        // beta_j's cross term inherits the minus of the coin entry
        // c = -sin(theta) e^{-i(phi1-phi2)/2}; alpha_j's carries +sin(theta) from b.
        const quad_complex beta_j = detail::qc_add(
            detail::qc_mul(detail::qc_polar(quad(j) * half_sum),
                           detail::qc_scale(sum_bb, beta0)),
            detail::qc_mul(detail::qc_polar(quad(j + 1) * half_sum - half_diff),
                           detail::qc_scale(-st * cross_b, alpha0)));

        table.alpha[static_cast<size_t>(j + n)] = detail::qc_round(alpha_j);
        table.beta[static_cast<size_t>(j + n)] = detail::qc_round(beta_j);
    }
    return table;
}

/// Closed form of the correlated walk's joint components r_n(j, up/down),
/// built from the same kappa prefactors. Agrees with Markov evolution to
/// below 1e-12 per component.
inline ClassicalJointState classical_components_closed(const CorrelationParams& params, int n) {
    using detail::quad;
    if (n < 0) throw std::domain_error("classical_components_closed requires n >= 0");

    const quad delta = quad(params.delta);
    const quad keep = (1 + delta) / 2;
    const quad flip = (1 - delta) / 2;
    const quad a0 = quad(params.q0_up);
    const quad b0 = quad(params.q0_down());

    std::vector<quad> keep_pow(static_cast<size_t>(n) + 2);
    keep_pow[0] = 1;
    for (size_t h = 1; h < keep_pow.size(); ++h) keep_pow[h] = keep_pow[h - 1] * keep;
    std::vector<quad> neg_delta_pow(static_cast<size_t>(n / 2) + 2);
    neg_delta_pow[0] = 1;
    for (size_t e = 1; e < neg_delta_pow.size(); ++e)
        neg_delta_pow[e] = neg_delta_pow[e - 1] * (-delta);

    ClassicalJointState table{n, std::vector<double>(static_cast<size_t>(2 * n) + 1),
                              std::vector<double>(static_cast<size_t>(2 * n) + 1)};

    for (int j = -n; j <= n; j += 2) {
        quad base = 0;
        for (int h = n % 2; h <= n; h += 2)
            base += detail::kappa_q(n, j, h) * keep_pow[static_cast<size_t>(h)] *
                    neg_delta_pow[static_cast<size_t>((n - h) / 2)];
        quad drop_up = 0, drop_down = 0, cross_up = 0, cross_down = 0;
        for (int h = ((n - 1) % 2 + 2) % 2; h <= n - 1; h += 2) {
            const quad weight = neg_delta_pow[static_cast<size_t>((n - 1 - h) / 2)];
            drop_up += detail::kappa_q(n - 1, j + 1, h) * keep_pow[static_cast<size_t>(h) + 1] * weight;
            drop_down += detail::kappa_q(n - 1, j - 1, h) * keep_pow[static_cast<size_t>(h) + 1] * weight;
            cross_up += detail::kappa_q(n - 1, j - 1, h) * keep_pow[static_cast<size_t>(h)] * weight;
            cross_down += detail::kappa_q(n - 1, j + 1, h) * keep_pow[static_cast<size_t>(h)] * weight;
        }
        // each component's leading sum is weighted by its own initial mass
        // (a0 for up, b0 for down)
        const quad up_j = a0 * (base - drop_up) + b0 * flip * cross_up;
        const quad down_j = b0 * (base - drop_down) + a0 * flip * cross_down;
        table.up[static_cast<size_t>(j + n)] = up_j.convert_to<double>();
        table.down[static_cast<size_t>(j + n)] = down_j.convert_to<double>();
    }
    return table;
}

/// Independent numerical oracle: evolve in Fourier space on a uniform grid of
/// N >= 2n+2 momenta, raising the transfer matrix to the n-th power through
/// the Fibonacci-Horner decomposition, then invert by the discrete sum
/// (1/N) sum_k e^{-ikj} psi_n(k). Exact up to roundoff because psi_n is a
/// trigonometric polynomial of degree <= n.
inline AmplitudeTable fourier_oracle(const CoinSetup& setup, int n, int grid_size) {
    if (n < 0) throw std::domain_error("fourier_oracle requires n >= 0");
    if (grid_size < 2 * n + 2)
        throw std::domain_error("fourier_oracle grid must have at least 2n+2 points");
    const CoinMatrix coin = build_coin(setup);
    const CoinState gamma = build_coin_state(setup);

    AmplitudeTable table{n, std::vector<complexd>(static_cast<size_t>(2 * n) + 1),
                         std::vector<complexd>(static_cast<size_t>(2 * n) + 1)};
    for (int m = 0; m < grid_size; ++m) {
        const double k = -pi + two_pi * m / grid_size;
        const complexd up_phase = std::polar(1.0, k);
        const complexd down_phase = std::polar(1.0, -k);
        const Mat2c transfer{coin.a * up_phase, coin.b * up_phase,
                             coin.c * down_phase, coin.d * down_phase};
        const Mat2c powered = matrix_power_fh(transfer, n);
        const complexd top = powered.m00 * gamma.alpha + powered.m01 * gamma.beta;
        const complexd bottom = powered.m10 * gamma.alpha + powered.m11 * gamma.beta;
        for (int j = -n; j <= n; j += 2) {
            const complexd back = std::polar(1.0, -k * j);
            table.alpha[static_cast<size_t>(j + n)] += back * top;
            table.beta[static_cast<size_t>(j + n)] += back * bottom;
        }
    }
    const double scale = 1.0 / grid_size;
    for (auto& v : table.alpha) v *= scale;
    for (auto& v : table.beta) v *= scale;
    return table;
}

inline AmplitudeTable fourier_oracle(const CoinSetup& setup, int n) {
    return fourier_oracle(setup, n, 2 * n + 2);
}

} // namespace qwalk
