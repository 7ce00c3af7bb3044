#pragma once

#include <string>

namespace hdl {

/// Default slack tolerance for inequality checks (double-precision quadrature
/// noise floor).
inline constexpr double kSlackTol = 1e-9;

/// One verified inequality lhs <= rhs; slack = rhs - lhs, pass iff
/// slack >= -tolerance. Grid checks record the worst sampled point.
/// Advisory checks are reported but excluded from pass/fail aggregation.
struct CheckResult {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double tolerance = kSlackTol;
  bool pass = true;
  bool advisory = false;
};

inline CheckResult make_check(std::string name, double lhs, double rhs, double tolerance = kSlackTol,
                              bool advisory = false) {
  CheckResult c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.slack = rhs - lhs;
  c.tolerance = tolerance;
  c.pass = c.slack >= -tolerance;
  c.advisory = advisory;
  return c;
}

}  // namespace hdl
