#pragma once

namespace xtransform::num {

/// Euler-Mascheroni constant, 30 significant digits.
inline constexpr double euler_mascheroni = 0.577215664901532860606512090082;

/// Digamma function Psi(z) = Gamma'(z)/Gamma(z) for z > 0. The argument is
/// raised above 8 with Psi(z+1) = Psi(z) + 1/z and the asymptotic series is
/// applied there; accurate to a few ulp in double precision.
double digamma(double z);

/// Surface measure of the unit sphere in R^n: 2 pi^{n/2} / Gamma(n/2).
double unit_sphere_area(int n);

/// Volume of the unit ball in R^n (= unit_sphere_area(n) / n).
double unit_ball_volume(int n);

} // namespace xtransform::num
