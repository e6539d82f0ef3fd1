#pragma once

#include <cmath>
#include <numbers>

namespace qwalk {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Absolute tolerance for angular comparisons after canonical reduction.
inline constexpr double angle_tolerance = 1e-12;

/// Reduce an angle into [0, period).
inline double wrap_angle(double x, double period) {
    double r = std::fmod(x, period);
    if (r < 0.0) r += period;
    if (r >= period) r = 0.0; // fmod can land exactly on period after the correction
    return r;
}

inline double wrap_two_pi(double x) { return wrap_angle(x, two_pi); }
inline double wrap_pi(double x) { return wrap_angle(x, pi); }

/// Distance between two angles modulo `period` (always in [0, period/2]).
inline double angle_distance(double x, double y, double period) {
    double d = wrap_angle(x - y, period);
    return std::min(d, period - d);
}

/// True when x == y (mod period) within `tol`.
inline bool congruent(double x, double y, double period, double tol = angle_tolerance) {
    return angle_distance(x, y, period) <= tol;
}

} // namespace qwalk
