#include "hdl/harmonic.hpp"

#include <cmath>
#include <stdexcept>

namespace hdl {

Complex eval(const PlanarHarmonicMap& f, Complex z) {
  return eval(f.g, z) + std::conj(eval(f.h, z));
}

Eigen::VectorXd eval(const VectorHarmonicMap& u, Complex z) {
  Eigen::VectorXd v(u.dim());
  for (Eigen::Index k = 0; k < u.dim(); ++k) v[k] = eval(u.F[static_cast<size_t>(k)], z).real();
  return v;
}

Dilatations dilatations(const PlanarHarmonicMap& f, Complex z) {
  Complex gp = eval(derivative(f.g), z);
  Complex hp = eval(derivative(f.h), z);
  Dilatations d;
  d.p = gp;
  d.q = std::conj(hp);
  double ag = std::abs(gp), ah = std::abs(hp);
  d.Lambda = ag + ah;
  d.lambda = std::abs(ag - ah);
  d.J = ag * ag - ah * ah;
  return d;
}

Frame2 vector_frame(const VectorHarmonicMap& u, Complex z) {
  Frame2 fr;
  fr.d1.resize(u.dim());
  fr.d2.resize(u.dim());
  for (Eigen::Index k = 0; k < u.dim(); ++k) {
    Complex fp = eval(derivative(u.F[static_cast<size_t>(k)]), z);
    fr.d1[k] = fp.real();
    fr.d2[k] = -fp.imag();
  }
  return fr;
}

Complex tangent_derivative(const PlanarHarmonicMap& f, Complex z) {
  Complex iz = Complex(0.0, 1.0) * z;
  return iz * eval(derivative(f.g), z) + std::conj(iz * eval(derivative(f.h), z));
}

VectorHarmonicMap to_vector(const PlanarHarmonicMap& f) {
  VectorHarmonicMap u;
  u.F.push_back(f.g + f.h);
  u.F.push_back(Complex(0.0, -1.0) * (f.g - f.h));
  return u;
}

PlanarHarmonicMap to_planar(const VectorHarmonicMap& u) {
  if (u.dim() != 2) throw std::invalid_argument("to_planar: map dimension must be 2");
  const Complex i(0.0, 1.0);
  PlanarHarmonicMap f;
  f.g = Complex(0.5) * (u.F[0] + i * u.F[1]);
  f.h = Complex(0.5) * (u.F[0] - i * u.F[1]);
  return f;
}

VectorHarmonicMap interval_map(ComplexSeries F) {
  VectorHarmonicMap u;
  u.F.push_back(std::move(F));
  return u;
}

}  // namespace hdl
