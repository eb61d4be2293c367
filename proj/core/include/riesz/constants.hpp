#pragma once

namespace riesz {

inline constexpr double pi = 3.14159265358979323846;

/// Surface measure of the unit sphere S^{d-1}, |S^{d-1}| = 2 pi^{d/2} / Gamma(d/2).
/// |S^0| = 2 (two points), |S^1| = 2 pi, |S^2| = 4 pi.
double unit_sphere_measure(int d);

/// Volume of the unit ball in R^d.
double unit_ball_volume(int d);

/// Gamma function. Thin wrapper so every constant in the toolkit goes through
/// one audited entry point (relative accuracy better than 1e-12 on (0, 10]).
double gamma_fn(double x);

}  // namespace riesz
