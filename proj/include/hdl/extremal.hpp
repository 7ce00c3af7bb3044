#pragma once

#include "hdl/harmonic.hpp"

namespace hdl {

/// Datum for the extremal planar family built from a holomorphic self-map of
/// the disk vanishing to order >= 2 at 0; nu = omega / z^2.
/// Validation: omega.coeffs[0] = omega.coeffs[1] = 0 and
/// sup |omega| <= 1 + 1e-9 over a 512-point circle of radius 0.999.
struct NuSpec {
  ComplexSeries omega;
};

NuSpec make_nu_spec(ComplexSeries omega);

/// Datum for the equivalent derivative-prescribed family: H vanishes to
/// order >= 2 at 0 and Re(2H) <= Re(a) on the boundary grid.
struct HSpec {
  ComplexSeries H;
  Complex a;
};

HSpec make_h_spec(ComplexSeries H, Complex a);

/// H = w / (1 + w) truncated to the degree of w; sends the disk onto
/// {Re < 1/2}, so 2H stays in {Re < 1}.
ComplexSeries half_plane_clamp(const ComplexSeries& w);

/// Conformal map of the disk onto the strip S0 sending z0 to the real point
/// b with positive derivative at z0. Coefficients come from the exact
/// three-term recurrence for the rational derivative, so they are accurate to
/// machine precision at every index. n_coeffs counts coefficients.
ComplexSeries strip_conformal(Complex z0, double b, Eigen::Index n_coeffs);

/// Interval-valued map (d/pi) arg((1+z)/(1-z)) of image diameter d, as the
/// m = 1 map with analytic completion -(2 i d / pi) atanh(z).
VectorHarmonicMap u_d_map(double d, Eigen::Index n_coeffs);

/// (2/pi) arg((1+iz)/(1-iz)); maps (-1,1) onto itself. Analytic completion
/// (4/pi) arctan(z).
VectorHarmonicMap u_hat_map(Eigen::Index n_coeffs);

/// Extremal planar map with g' = 1/(1 + omega), h' = nu/(1 + omega),
/// g(0) = h(0) = 0; saturates the coefficient-length bound 2 pi |g'(0)| = L.
PlanarHarmonicMap f_nu(const NuSpec& spec, Eigen::Index n_coeffs);

/// Planar map with g' = a - H, h' = H / z^2, g(0) = h(0) = 0. Matches f_nu
/// under H = omega / (1 + omega), a = 1.
PlanarHarmonicMap f_H(const HSpec& spec, Eigen::Index n_coeffs);

/// Round image curve u_k = a_k x - b_k y; requires |a| = |b| and a.b = 0
/// (within 1e-12). Saturates the length and energy bounds at the origin.
VectorHarmonicMap circle_map(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                             Eigen::Index n_coeffs);

/// Boundary-collapse example: f = Re(z/(1-z)) + i Im(atanh z). The upper and
/// lower semicircles are mapped to single points -1/2 +- i pi/4.
PlanarHarmonicMap duren_example(Eigen::Index n_coeffs);

}  // namespace hdl
