#pragma once

#include <span>
#include <vector>

#include "hdl/check.hpp"
#include "hdl/harmonic.hpp"

namespace hdl {

/// Scalars governing the sharp interval bounds at base point a in (-1,1):
/// s = tan(pi (a+1)/4), e = 1/s, alpha = (a+1) pi / 2.
struct SchwarzParams {
  double a, s, e, alpha;
};

SchwarzParams params(double a);

/// Sharp upper envelope for harmonic h: disk -> (-1,1) with h(0) = a:
/// (4/pi) arctan(s (1+r)/(1-r)) - 1. Increasing in r and a; equals a at r = 0.
double upper_envelope(double r, double a);
/// Sharp lower envelope, 1 - (4/pi) arctan(e (1+r)/(1-r)); mirror of
/// upper_envelope under a -> -a.
double lower_envelope(double r, double a);

/// Closed-form radial derivatives of the envelopes.
double upper_envelope_deriv(double r, double a);
double lower_envelope_deriv(double r, double a);

/// Sharp gradient bound at the origin for h(0) = a: (4/pi) sin(alpha(a)).
double gradient_bound_origin(double a);

/// Sharp gradient bound at z for maps with h(z) = b:
/// (4/pi) sin(alpha(|b|)) / (1 - |z|^2).
double gradient_bound_interior(Complex z, double b);

/// Gradient bound with no value constraint: (4/pi) / (1 - |z|^2).
double khavinson_bound(Complex z);

/// Lower bound 2/(s(a0) pi) for the boundary stretch of a self-map of the
/// disk with |f(0)| = a0 that fixes a boundary modulus.
double boundary_bound(double a0);

/// Pointwise envelope at z for maps with f(a) = b, in the precomposed form
/// (4/pi) arctan( (1+|phi_a(z)|)/(1-|phi_a(z)|) tan(alpha(|b|)/2) ) - 1.
/// Identical to upper_envelope(|phi_a(z)|, |b|).
double interior_envelope(Complex z, Complex a, double b);

/// Verify lower_envelope <= h <= upper_envelope on a polar grid for an
/// interval-valued map (m = 1); a := h(0). Returns the upper and lower
/// checks at their worst grid points.
std::vector<CheckResult> envelope_check(const VectorHarmonicMap& h, std::span<const double> rgrid,
                                        std::span<const double> thetagrid);

/// Verify |f(z)| <= upper_envelope(|z|, |f(0)|) for a self-map of the disk.
CheckResult modulus_envelope_check(const PlanarHarmonicMap& f, std::span<const double> rgrid,
                                   std::span<const double> thetagrid);

/// Boundary derivative data at b on the unit circle: the radial derivative is
/// estimated by Richardson-extrapolated one-sided differences with steps
/// {1e-3, 5e-4, 2.5e-4}; the stretch Lambda_f and the radial derivative are
/// compared against boundary_bound(|f(0)|).
struct BoundaryDerivativeReport {
  Complex boundary_value;
  double radial_derivative;
  double Lambda;
  double bound;
  CheckResult stretch_check;
  CheckResult radial_check;
};

BoundaryDerivativeReport boundary_derivative_check(const PlanarHarmonicMap& f, Complex b);

}  // namespace hdl
