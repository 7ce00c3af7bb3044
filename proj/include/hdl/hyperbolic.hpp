#pragma once

#include <span>

#include "hdl/check.hpp"
#include "hdl/series.hpp"

namespace hdl {

/// Hyperbolic density of the strip S0 = (-1,1) x R at w: (pi/2) sec(pi Re w / 2).
/// Depends on Re w only. Not evaluated within 1e-12 of the boundary.
double strip_density(Complex w);

/// Hyperbolic distance between real points of S0: |ln(s(u2)/s(u1))| with
/// s(a) = tan(pi (a+1) / 4).
double strip_distance(double u1, double u2);

/// The same distance as the Gauss-Legendre integral of strip_density along
/// the real segment; independent oracle for strip_distance.
double strip_distance_quadrature(double u1, double u2, int n);

/// Hyperbolic density of the unit disk: 2 / (1 - |z|^2).
double disk_density(Complex z);

/// Contraction check for a holomorphic omega: disk -> S0:
/// strip_density(omega(z)) |omega'(z)| <= disk_density(z) at each grid point.
/// Records the worst point. Throws RangeViolation when omega leaves S0 by
/// more than 1e-9.
CheckResult schwarz_pick_check(const ComplexSeries& omega, std::span<const Complex> zgrid);

}  // namespace hdl
