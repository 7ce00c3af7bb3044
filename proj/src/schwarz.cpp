#include "hdl/schwarz.hpp"

#include <cmath>
#include <limits>

#include "hdl/errors.hpp"

namespace hdl {

namespace {
void require_interval(double a, const char* what) {
  if (!(a > -1.0 && a < 1.0)) throw OutsideInterval(what);
}

void require_radius(double r, const char* what) {
  if (!(r >= 0.0 && r < 1.0)) throw RadiusOutOfRange(what);
}
}  // namespace

SchwarzParams params(double a) {
  require_interval(a, "params: a outside (-1,1)");
  SchwarzParams p;
  p.a = a;
  p.s = std::tan(0.25 * M_PI * (a + 1.0));
  p.e = 1.0 / p.s;
  p.alpha = 0.5 * M_PI * (a + 1.0);
  return p;
}

double upper_envelope(double r, double a) {
  require_radius(r, "upper_envelope: r outside [0,1)");
  SchwarzParams p = params(a);
  return 4.0 / M_PI * std::atan(p.s * (1.0 + r) / (1.0 - r)) - 1.0;
}

double lower_envelope(double r, double a) {
  require_radius(r, "lower_envelope: r outside [0,1)");
  SchwarzParams p = params(a);
  return 1.0 - 4.0 / M_PI * std::atan(p.e * (1.0 + r) / (1.0 - r));
}

double upper_envelope_deriv(double r, double a) {
  require_radius(r, "upper_envelope_deriv: r outside [0,1)");
  SchwarzParams p = params(a);
  double um = 1.0 - r, up = 1.0 + r;
  return 4.0 / M_PI * 2.0 * p.s / (um * um + p.s * p.s * up * up);
}

double lower_envelope_deriv(double r, double a) {
  require_radius(r, "lower_envelope_deriv: r outside [0,1)");
  SchwarzParams p = params(a);
  double um = 1.0 - r, up = 1.0 + r;
  return -4.0 / M_PI * 2.0 * p.s / (up * up + p.s * p.s * um * um);
}

double gradient_bound_origin(double a) {
  require_interval(a, "gradient_bound_origin: a outside (-1,1)");
  return 4.0 / M_PI * std::sin(params(a).alpha);
}

double gradient_bound_interior(Complex z, double b) {
  if (std::abs(z) >= 1.0) throw OutsideDisk("gradient_bound_interior: |z| >= 1");
  require_interval(b, "gradient_bound_interior: b outside (-1,1)");
  return 4.0 / M_PI * std::sin(params(std::abs(b)).alpha) / (1.0 - std::norm(z));
}

double khavinson_bound(Complex z) {
  if (std::abs(z) >= 1.0) throw OutsideDisk("khavinson_bound: |z| >= 1");
  return 4.0 / M_PI / (1.0 - std::norm(z));
}

double boundary_bound(double a0) {
  require_interval(a0, "boundary_bound: a0 outside (-1,1)");
  return 2.0 / (params(a0).s * M_PI);
}

double interior_envelope(Complex z, Complex a, double b) {
  if (std::abs(z) >= 1.0 || std::abs(a) >= 1.0)
    throw OutsideDisk("interior_envelope: point outside the disk");
  double w = std::abs((a - z) / (1.0 - std::conj(a) * z));
  double t = std::tan(0.5 * params(std::abs(b)).alpha);
  return 4.0 / M_PI * std::atan((1.0 + w) / (1.0 - w) * t) - 1.0;
}

std::vector<CheckResult> envelope_check(const VectorHarmonicMap& h, std::span<const double> rgrid,
                                        std::span<const double> thetagrid) {
  const ComplexSeries& F = h.F.at(0);
  double a = eval(F, Complex(0.0)).real();
  require_interval(a, "envelope_check: h(0) outside (-1,1)");

  double up_slack = std::numeric_limits<double>::infinity(), up_lhs = 0.0, up_rhs = 0.0;
  double lo_slack = std::numeric_limits<double>::infinity(), lo_lhs = 0.0, lo_rhs = 0.0;
  for (double r : rgrid) {
    double xp = upper_envelope(r, a);
    double xm = lower_envelope(r, a);
    for (double t : thetagrid) {
      double v = eval(F, r * Complex(std::cos(t), std::sin(t))).real();
      if (std::abs(v) > 1.0 + 1e-9) throw RangeViolation("envelope_check: h leaves (-1,1)");
      if (xp - v < up_slack) {
        up_slack = xp - v;
        up_lhs = v;
        up_rhs = xp;
      }
      if (v - xm < lo_slack) {
        lo_slack = v - xm;
        lo_lhs = xm;
        lo_rhs = v;
      }
    }
  }
  return {make_check("envelope_upper", up_lhs, up_rhs),
          make_check("envelope_lower", lo_lhs, lo_rhs)};
}

CheckResult modulus_envelope_check(const PlanarHarmonicMap& f, std::span<const double> rgrid,
                                   std::span<const double> thetagrid) {
  double a = std::abs(eval(f, Complex(0.0)));
  if (a >= 1.0) throw OutsideDisk("modulus_envelope_check: |f(0)| >= 1");

  double worst_slack = std::numeric_limits<double>::infinity(), lhs = 0.0, rhs = 0.0;
  for (double r : rgrid) {
    double xp = upper_envelope(r, a);
    for (double t : thetagrid) {
      double v = std::abs(eval(f, r * Complex(std::cos(t), std::sin(t))));
      if (v > 1.0 + 1e-9) throw RangeViolation("modulus_envelope_check: f leaves the disk");
      if (xp - v < worst_slack) {
        worst_slack = xp - v;
        lhs = v;
        rhs = xp;
      }
    }
  }
  return make_check("modulus_envelope", lhs, rhs);
}

BoundaryDerivativeReport boundary_derivative_check(const PlanarHarmonicMap& f, Complex b) {
  const double delta = 1e-8;
  Complex fb = eval(f, b * (1.0 - delta));
  if (std::abs(fb) < 1.0 - 1e-4)
    throw NotBoundaryFixed("boundary_derivative_check: |f(b)| < 1 - 1e-4");

  auto diff = [&](double h) { return (fb - eval(f, b * (1.0 - delta - h))) / h; };
  Complex d1 = diff(1e-3), d2 = diff(5e-4), d3 = diff(2.5e-4);
  Complex e1 = 2.0 * d2 - d1;
  Complex e2 = 2.0 * d3 - d2;
  Complex radial = (4.0 * e2 - e1) / 3.0;

  BoundaryDerivativeReport rep;
  rep.boundary_value = fb;
  rep.radial_derivative = std::abs(radial);
  rep.Lambda = dilatations(f, b * (1.0 - delta)).Lambda;
  rep.bound = boundary_bound(std::abs(eval(f, Complex(0.0))));
  rep.stretch_check = make_check("boundary_stretch", rep.bound, rep.Lambda, 1e-6);
  rep.radial_check = make_check("boundary_radial_derivative", rep.bound, rep.radial_derivative, 1e-6);
  return rep;
}

}  // namespace hdl
