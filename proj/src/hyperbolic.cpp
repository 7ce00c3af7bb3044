#include "hdl/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hdl/errors.hpp"
#include "hdl/quadrature.hpp"

namespace hdl {

namespace {
constexpr double kBoundaryGuard = 1e-12;

double quarter_tan(double a) { return std::tan(0.25 * M_PI * (a + 1.0)); }
}  // namespace

double strip_density(Complex w) {
  double u = w.real();
  if (std::abs(u) >= 1.0 - kBoundaryGuard) throw OutsideStrip("strip_density: |Re w| >= 1");
  return 0.5 * M_PI / std::cos(0.5 * M_PI * u);
}

double strip_distance(double u1, double u2) {
  if (std::abs(u1) >= 1.0 || std::abs(u2) >= 1.0)
    throw OutsideInterval("strip_distance: endpoint outside (-1,1)");
  return std::abs(std::log(quarter_tan(u2) / quarter_tan(u1)));
}

double strip_distance_quadrature(double u1, double u2, int n) {
  if (std::abs(u1) >= 1.0 || std::abs(u2) >= 1.0)
    throw OutsideInterval("strip_distance_quadrature: endpoint outside (-1,1)");
  double lo = std::min(u1, u2), hi = std::max(u1, u2);
  return integrate_panels([](double u) { return strip_density(Complex(u, 0.0)); }, lo, hi, n, 1);
}

double disk_density(Complex z) {
  double r2 = std::norm(z);
  if (r2 >= 1.0) throw OutsideDisk("disk_density: |z| >= 1");
  return 2.0 / (1.0 - r2);
}

CheckResult schwarz_pick_check(const ComplexSeries& omega, std::span<const Complex> zgrid) {
  ComplexSeries dom = derivative(omega);
  double worst_slack = std::numeric_limits<double>::infinity();
  double worst_lhs = 0.0, worst_rhs = 0.0;
  for (Complex z : zgrid) {
    Complex w = eval(omega, z);
    if (std::abs(w.real()) > 1.0 + 1e-9)
      throw RangeViolation("schwarz_pick_check: omega leaves the strip");
    // Within the guard band the density is evaluated at the clamped abscissa;
    // the resulting huge lhs fails the check rather than throwing.
    double u = std::clamp(w.real(), -1.0 + 2e-12, 1.0 - 2e-12);
    double lhs = strip_density(Complex(u, 0.0)) * std::abs(eval(dom, z));
    double rhs = disk_density(z);
    if (rhs - lhs < worst_slack) {
      worst_slack = rhs - lhs;
      worst_lhs = lhs;
      worst_rhs = rhs;
    }
  }
  return make_check("schwarz_pick", worst_lhs, worst_rhs);
}

}  // namespace hdl
