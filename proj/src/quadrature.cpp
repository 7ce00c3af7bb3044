#include "hdl/quadrature.hpp"

#include <cmath>

namespace hdl {

GaussLegendre gauss_legendre(int n) {
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev-based initial guess, then Newton on P_n.
    double x = std::cos(M_PI * (double(i) + 0.75) / (double(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / double(k);
        p0 = p1;
        p1 = p2;
      }
      dp = double(n) * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        int points_per_panel, int panels) {
  GaussLegendre rule = gauss_legendre(points_per_panel);
  double total = 0.0;
  double width = (b - a) / double(panels);
  for (int p = 0; p < panels; ++p) {
    double lo = a + width * double(p);
    double mid = lo + 0.5 * width;
    for (int i = 0; i < points_per_panel; ++i)
      total += rule.weights[i] * f(mid + 0.5 * width * rule.nodes[i]);
  }
  return total * 0.5 * width;
}

double trapezoid_2pi(const std::function<double(double)>& f, int n) {
  double s = 0.0;
  for (int j = 0; j < n; ++j) s += f(2.0 * M_PI * double(j) / double(n));
  return s * 2.0 * M_PI / double(n);
}

double richardson_boundary(const std::function<double(double)>& f_of_r, double h) {
  double a = f_of_r(1.0 - h);
  double b = f_of_r(1.0 - 2.0 * h);
  double c = f_of_r(1.0 - 4.0 * h);
  return (8.0 * a - 6.0 * b + c) / 3.0;
}

}  // namespace hdl
