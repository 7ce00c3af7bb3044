#pragma once

#include <stdexcept>

namespace hdl {

// Domain errors thrown by the library. Each names the violated precondition.
struct ZeroConstantTerm : std::domain_error {
  using std::domain_error::domain_error;
};
struct BadDiskPoint : std::domain_error {
  using std::domain_error::domain_error;
};
struct RadiusOutOfRange : std::domain_error {
  using std::domain_error::domain_error;
};
struct OutsideStrip : std::domain_error {
  using std::domain_error::domain_error;
};
struct OutsideInterval : std::domain_error {
  using std::domain_error::domain_error;
};
struct OutsideDisk : std::domain_error {
  using std::domain_error::domain_error;
};
struct RangeViolation : std::domain_error {
  using std::domain_error::domain_error;
};
struct NotBoundaryFixed : std::domain_error {
  using std::domain_error::domain_error;
};
struct SpecViolation : std::domain_error {
  using std::domain_error::domain_error;
};
struct DegeneratePoint : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace hdl
