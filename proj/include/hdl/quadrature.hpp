#pragma once

#include <Eigen/Dense>
#include <functional>

namespace hdl {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  Eigen::VectorXd nodes, weights;
};

/// Nodes by Newton iteration on the Legendre recurrence.
GaussLegendre gauss_legendre(int n);

/// Composite Gauss-Legendre over [a, b] split into equal panels.
double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        int points_per_panel, int panels);

/// Equispaced trapezoid over one period [0, 2pi); spectrally accurate for
/// smooth periodic integrands.
double trapezoid_2pi(const std::function<double(double)>& f, int n);

/// Extrapolated boundary value of r -> f(r) at r = 1 from the three interior
/// radii 1-h, 1-2h, 1-4h; exact through second order in h.
double richardson_boundary(const std::function<double(double)>& f_of_r, double h = 1e-4);

}  // namespace hdl
