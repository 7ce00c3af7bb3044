#include "hdl/extremal.hpp"

#include <cmath>

#include "hdl/errors.hpp"

namespace hdl {

namespace {
constexpr int kBoundaryGridSamples = 512;
constexpr double kBoundaryGridRadius = 0.999;

void require_order_two_zero(const ComplexSeries& s, const char* what) {
  if (s.size() < 2 || std::abs(s.coeffs[0]) > 1e-14 || std::abs(s.coeffs[1]) > 1e-14)
    throw SpecViolation(what);
}
}  // namespace

NuSpec make_nu_spec(ComplexSeries omega) {
  require_order_two_zero(omega, "make_nu_spec: omega must vanish to order >= 2 at 0");
  if (sup_on_circle(omega, kBoundaryGridRadius, kBoundaryGridSamples) > 1.0 + 1e-9)
    throw SpecViolation("make_nu_spec: omega is not a self-map of the disk");
  return NuSpec{std::move(omega)};
}

HSpec make_h_spec(ComplexSeries H, Complex a) {
  require_order_two_zero(H, "make_h_spec: H must vanish to order >= 2 at 0");
  double sup_re = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < kBoundaryGridSamples; ++j) {
    double t = 2.0 * M_PI * double(j) / double(kBoundaryGridSamples);
    Complex z = kBoundaryGridRadius * Complex(std::cos(t), std::sin(t));
    sup_re = std::max(sup_re, 2.0 * eval(H, z).real());
  }
  if (sup_re > a.real() + 1e-9)
    throw SpecViolation("make_h_spec: Re(2H) exceeds Re(a) on the boundary grid");
  return HSpec{std::move(H), a};
}

ComplexSeries half_plane_clamp(const ComplexSeries& w) {
  ComplexSeries denom = ComplexSeries::constant(1.0) + w;
  return multiply(w, reciprocal(denom, w.degree()), w.degree());
}

ComplexSeries strip_conformal(Complex z0, double b, Eigen::Index n_coeffs) {
  if (std::abs(z0) >= 1.0) throw BadDiskPoint("strip_conformal: |z0| >= 1");
  if (!(b > -1.0 && b < 1.0)) throw OutsideInterval("strip_conformal: b outside (-1,1)");

  // G = (4/pi) arctan(M) with M the disk automorphism taking z0 to
  // w0 = tan(pi b / 4). Writing M = (alpha z + beta)/(gamma z + delta),
  // G' = (4/pi)(alpha delta - beta gamma) / ((gamma z + delta)^2 + (alpha z + beta)^2),
  // a reciprocal of a quadratic whose roots lie on the unit circle.
  Complex w0 = std::tan(0.25 * M_PI * b);
  Complex al = 1.0 - w0 * std::conj(z0);
  Complex be = w0 - z0;
  Complex ga = w0 - std::conj(z0);
  Complex de = 1.0 - w0 * z0;

  ComplexSeries quad{de * de + be * be, 2.0 * (ga * de + al * be), ga * ga + al * al};
  Complex scale = 4.0 / M_PI * (al * de - be * ga);
  ComplexSeries gprime = scale * reciprocal(quad, n_coeffs - 2);
  Complex g0 = 4.0 / M_PI * std::atan(be / de);
  return antiderivative(gprime, g0);
}

VectorHarmonicMap u_d_map(double d, Eigen::Index n_coeffs) {
  return interval_map(Complex(0.0, -2.0 * d / M_PI) * atanh_series(n_coeffs));
}

VectorHarmonicMap u_hat_map(Eigen::Index n_coeffs) {
  return interval_map(Complex(4.0 / M_PI) * arctan_series(n_coeffs));
}

PlanarHarmonicMap f_nu(const NuSpec& spec, Eigen::Index n_coeffs) {
  ComplexSeries nu = shift_down(spec.omega, 2);
  ComplexSeries denom = ComplexSeries::constant(1.0) + spec.omega;
  ComplexSeries gprime = reciprocal(denom, n_coeffs - 2);
  ComplexSeries hprime = multiply(nu, gprime, n_coeffs - 2);
  PlanarHarmonicMap f;
  f.g = antiderivative(gprime, 0.0);
  f.h = antiderivative(hprime, 0.0);
  return f;
}

PlanarHarmonicMap f_H(const HSpec& spec, Eigen::Index n_coeffs) {
  ComplexSeries gprime = truncate(ComplexSeries::constant(spec.a) - spec.H, n_coeffs - 1);
  ComplexSeries hprime = truncate(shift_down(spec.H, 2), n_coeffs - 1);
  PlanarHarmonicMap f;
  f.g = antiderivative(gprime, 0.0);
  f.h = antiderivative(hprime, 0.0);
  return f;
}

VectorHarmonicMap circle_map(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                             Eigen::Index n_coeffs) {
  if (a.size() != b.size()) throw SpecViolation("circle_map: dimension mismatch");
  if (std::abs(a.norm() - b.norm()) > 1e-12) throw SpecViolation("circle_map: |a| != |b|");
  if (std::abs(a.dot(b)) > 1e-12) throw SpecViolation("circle_map: a.b != 0");
  VectorHarmonicMap u;
  for (Eigen::Index k = 0; k < a.size(); ++k)
    u.F.push_back(ComplexSeries::monomial(Complex(a[k], b[k]), 1, n_coeffs));
  return u;
}

PlanarHarmonicMap duren_example(Eigen::Index n_coeffs) {
  ComplexSeries l = cayley_numerator_series(n_coeffs);
  ComplexSeries s = atanh_series(n_coeffs);
  PlanarHarmonicMap f;
  f.g = Complex(0.5) * (l + s);
  f.h = Complex(0.5) * (l - s);
  return f;
}

}  // namespace hdl
