#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hdl/series.hpp"

namespace hdl {

/// Planar harmonic map f = g + conj(h) with g, h holomorphic.
struct PlanarHarmonicMap {
  ComplexSeries g, h;
};

/// Vector-valued harmonic map u: disk -> R^m with components u_k = Re F_k.
struct VectorHarmonicMap {
  std::vector<ComplexSeries> F;

  Eigen::Index dim() const { return static_cast<Eigen::Index>(F.size()); }
};

/// Wirtinger data of a planar map at a point: p = f_z, q = f_zbar,
/// Lambda = |p|+|q|, lambda = ||p|-|q||, J = |p|^2 - |q|^2.
struct Dilatations {
  Complex p, q;
  double Lambda, lambda, J;
};

/// Partial-derivative frame D1u = u_x, D2u = u_y of a vector map.
struct Frame2 {
  Eigen::VectorXd d1, d2;
};

Complex eval(const PlanarHarmonicMap& f, Complex z);
Eigen::VectorXd eval(const VectorHarmonicMap& u, Complex z);

Dilatations dilatations(const PlanarHarmonicMap& f, Complex z);

/// D1u_k = Re F_k'(z), D2u_k = -Im F_k'(z).
Frame2 vector_frame(const VectorHarmonicMap& u, Complex z);

/// Tangential derivative along the circle through z centered at 0:
/// f_t' = i z g'(z) + conj(i z h'(z)).
Complex tangent_derivative(const PlanarHarmonicMap& f, Complex z);

/// View f = g + conj(h) as u = (Re f, Im f): F1 = g + h, F2 = -i (g - h).
VectorHarmonicMap to_vector(const PlanarHarmonicMap& f);
/// Inverse of to_vector for m = 2: g = (F1 + i F2)/2, h = (F1 - i F2)/2.
PlanarHarmonicMap to_planar(const VectorHarmonicMap& u);
/// Real-part map u = Re F as an m = 1 vector map.
VectorHarmonicMap interval_map(ComplexSeries F);

}  // namespace hdl
