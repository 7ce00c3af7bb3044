#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>

namespace hdl {

using Complex = std::complex<double>;

/// Truncated power series with complex coefficients; coeffs[k] multiplies z^k.
/// Represents a holomorphic function on the unit disk by its Taylor polynomial.
/// Immutable by convention: every operation returns a fresh series.
struct ComplexSeries {
  Eigen::VectorXcd coeffs;

  ComplexSeries() : coeffs(Eigen::VectorXcd::Zero(1)) {}
  explicit ComplexSeries(Eigen::VectorXcd c);
  ComplexSeries(std::initializer_list<Complex> c);

  Eigen::Index degree() const { return coeffs.size() - 1; }
  Eigen::Index size() const { return coeffs.size(); }

  static ComplexSeries zero(Eigen::Index n_coeffs = 1);
  static ComplexSeries constant(Complex c0);
  static ComplexSeries identity();
  /// c * z^power, padded with zeros up to n_coeffs when larger.
  static ComplexSeries monomial(Complex c, Eigen::Index power, Eigen::Index n_coeffs = 0);
};

/// Horner evaluation of the stored polynomial; exact for polynomial data.
Complex eval(const ComplexSeries& s, Complex z);

ComplexSeries derivative(const ComplexSeries& s);
ComplexSeries antiderivative(const ComplexSeries& s, Complex c0);

/// Keep the first n_coeffs coefficients (zero-padding when the series is shorter).
ComplexSeries truncate(const ComplexSeries& s, Eigen::Index n_coeffs);
/// Multiply by z^k.
ComplexSeries shift_up(const ComplexSeries& s, Eigen::Index k);
/// Divide by z^k; the k lowest coefficients must vanish (|.| <= 1e-14).
ComplexSeries shift_down(const ComplexSeries& s, Eigen::Index k);

ComplexSeries operator+(const ComplexSeries& a, const ComplexSeries& b);
ComplexSeries operator-(const ComplexSeries& a, const ComplexSeries& b);
ComplexSeries operator*(Complex c, const ComplexSeries& s);
ComplexSeries operator-(const ComplexSeries& s);

/// Truncated Cauchy product up to degree degree_out.
ComplexSeries multiply(const ComplexSeries& a, const ComplexSeries& b, Eigen::Index degree_out);

/// Truncated series t of degree degree_out with s*t = 1 + O(z^{degree_out+1}),
/// by the standard coefficient recurrence. Throws ZeroConstantTerm when
/// |s.coeffs[0]| < 1e-14.
ComplexSeries reciprocal(const ComplexSeries& s, Eigen::Index degree_out);

/// Taylor coefficients from equispaced samples on the circle |z| = r:
/// coeffs[k] = DFT(samples)[k] / (n_samples * r^k) for k < n_samples/2.
/// Coefficient noise grows like eps / r^k, so keep the evaluation radius
/// below r or request few coefficients.
ComplexSeries coefficients_from_samples(const std::function<Complex(double)>& sampler, double r,
                                        Eigen::Index n_samples);

/// Series of s(phi_a(z)) to degree degree_out, where phi_a(z) = (a - z)/(1 - conj(a) z)
/// is the involutive disk automorphism swapping 0 and a. Computed by circle
/// sampling at radius r0 (see coefficients_from_samples for the accuracy trade-off).
ComplexSeries mobius_precompose(const ComplexSeries& s, Complex a, Eigen::Index degree_out,
                                double r0 = 0.5);

/// max over n equispaced samples of |eval(s, r e^{it})|.
double sup_on_circle(const ComplexSeries& s, double r, int n_samples);

/// arctan(z) = sum (-1)^m z^{2m+1} / (2m+1).
ComplexSeries arctan_series(Eigen::Index n_coeffs);
/// atanh(z) = sum z^{2m+1} / (2m+1).
ComplexSeries atanh_series(Eigen::Index n_coeffs);
/// z / (1 - z) = sum_{k>=1} z^k.
ComplexSeries cayley_numerator_series(Eigen::Index n_coeffs);

}  // namespace hdl
