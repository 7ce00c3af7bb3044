#include "hdl/series.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <vector>

#include "hdl/errors.hpp"

namespace hdl {

namespace {
constexpr double kZeroTol = 1e-14;

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

ComplexSeries::ComplexSeries(Eigen::VectorXcd c) : coeffs(std::move(c)) {
  if (coeffs.size() == 0) coeffs = Eigen::VectorXcd::Zero(1);
}

ComplexSeries::ComplexSeries(std::initializer_list<Complex> c) {
  coeffs = Eigen::VectorXcd::Zero(std::max<Eigen::Index>(1, static_cast<Eigen::Index>(c.size())));
  Eigen::Index k = 0;
  for (Complex v : c) coeffs[k++] = v;
}

ComplexSeries ComplexSeries::zero(Eigen::Index n_coeffs) {
  return ComplexSeries(Eigen::VectorXcd::Zero(std::max<Eigen::Index>(1, n_coeffs)));
}

ComplexSeries ComplexSeries::constant(Complex c0) { return ComplexSeries{c0}; }

ComplexSeries ComplexSeries::identity() { return ComplexSeries{0.0, 1.0}; }

ComplexSeries ComplexSeries::monomial(Complex c, Eigen::Index power, Eigen::Index n_coeffs) {
  Eigen::Index n = std::max(power + 1, std::max<Eigen::Index>(1, n_coeffs));
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
  v[power] = c;
  return ComplexSeries(std::move(v));
}

Complex eval(const ComplexSeries& s, Complex z) {
  Complex acc = 0.0;
  for (Eigen::Index k = s.coeffs.size() - 1; k >= 0; --k) acc = acc * z + s.coeffs[k];
  return acc;
}

ComplexSeries derivative(const ComplexSeries& s) {
  if (s.size() == 1) return ComplexSeries::zero();
  Eigen::VectorXcd d(s.size() - 1);
  for (Eigen::Index k = 0; k < d.size(); ++k) d[k] = double(k + 1) * s.coeffs[k + 1];
  return ComplexSeries(std::move(d));
}

ComplexSeries antiderivative(const ComplexSeries& s, Complex c0) {
  Eigen::VectorXcd a(s.size() + 1);
  a[0] = c0;
  for (Eigen::Index k = 1; k < a.size(); ++k) a[k] = s.coeffs[k - 1] / double(k);
  return ComplexSeries(std::move(a));
}

ComplexSeries truncate(const ComplexSeries& s, Eigen::Index n_coeffs) {
  n_coeffs = std::max<Eigen::Index>(1, n_coeffs);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n_coeffs);
  v.head(std::min(n_coeffs, s.size())) = s.coeffs.head(std::min(n_coeffs, s.size()));
  return ComplexSeries(std::move(v));
}

ComplexSeries shift_up(const ComplexSeries& s, Eigen::Index k) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(s.size() + k);
  v.tail(s.size()) = s.coeffs;
  return ComplexSeries(std::move(v));
}

ComplexSeries shift_down(const ComplexSeries& s, Eigen::Index k) {
  k = std::min(k, s.size());
  for (Eigen::Index j = 0; j < k; ++j) {
    if (std::abs(s.coeffs[j]) > kZeroTol)
      throw SpecViolation("shift_down: low-order coefficient is not zero");
  }
  if (s.size() == k) return ComplexSeries::zero();
  return ComplexSeries(Eigen::VectorXcd(s.coeffs.tail(s.size() - k)));
}

ComplexSeries operator+(const ComplexSeries& a, const ComplexSeries& b) {
  Eigen::Index n = std::max(a.size(), b.size());
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
  v.head(a.size()) = a.coeffs;
  v.head(b.size()) += b.coeffs;
  return ComplexSeries(std::move(v));
}

ComplexSeries operator-(const ComplexSeries& a, const ComplexSeries& b) {
  Eigen::Index n = std::max(a.size(), b.size());
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
  v.head(a.size()) = a.coeffs;
  v.head(b.size()) -= b.coeffs;
  return ComplexSeries(std::move(v));
}

ComplexSeries operator*(Complex c, const ComplexSeries& s) {
  return ComplexSeries(Eigen::VectorXcd(c * s.coeffs));
}

ComplexSeries operator-(const ComplexSeries& s) { return Complex(-1.0) * s; }

ComplexSeries multiply(const ComplexSeries& a, const ComplexSeries& b, Eigen::Index degree_out) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(degree_out + 1);
  for (Eigen::Index i = 0; i < std::min(a.size(), degree_out + 1); ++i) {
    if (a.coeffs[i] == Complex(0.0)) continue;
    Eigen::Index jmax = std::min(b.size(), degree_out + 1 - i);
    for (Eigen::Index j = 0; j < jmax; ++j) v[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return ComplexSeries(std::move(v));
}

ComplexSeries reciprocal(const ComplexSeries& s, Eigen::Index degree_out) {
  if (std::abs(s.coeffs[0]) < kZeroTol)
    throw ZeroConstantTerm("reciprocal: constant term is (near) zero");
  Eigen::VectorXcd t(degree_out + 1);
  t[0] = 1.0 / s.coeffs[0];
  for (Eigen::Index k = 1; k <= degree_out; ++k) {
    Complex acc = 0.0;
    Eigen::Index jmax = std::min(k, s.size() - 1);
    for (Eigen::Index j = 1; j <= jmax; ++j) acc += s.coeffs[j] * t[k - j];
    t[k] = -acc / s.coeffs[0];
  }
  return ComplexSeries(std::move(t));
}

ComplexSeries coefficients_from_samples(const std::function<Complex(double)>& sampler, double r,
                                        Eigen::Index n_samples) {
  if (!(r > 0.0 && r < 1.0)) throw RadiusOutOfRange("coefficients_from_samples: r not in (0,1)");
  if (!is_power_of_two(n_samples))
    throw std::invalid_argument("coefficients_from_samples: n_samples must be a power of two");

  std::vector<Complex> in(static_cast<size_t>(n_samples));
  const double step = 2.0 * M_PI / double(n_samples);
  for (Eigen::Index j = 0; j < n_samples; ++j) in[static_cast<size_t>(j)] = sampler(step * double(j));

  std::vector<Complex> out;
  Eigen::FFT<double> fft;
  fft.fwd(out, in);

  Eigen::Index n_keep = n_samples / 2;
  Eigen::VectorXcd c(n_keep);
  double rk = 1.0;
  for (Eigen::Index k = 0; k < n_keep; ++k) {
    c[k] = out[static_cast<size_t>(k)] / (double(n_samples) * rk);
    rk *= r;
  }
  return ComplexSeries(std::move(c));
}

ComplexSeries mobius_precompose(const ComplexSeries& s, Complex a, Eigen::Index degree_out,
                                double r0) {
  if (!(std::abs(a) < 1.0)) throw BadDiskPoint("mobius_precompose: |a| >= 1");
  Eigen::Index n_samples = 1024;
  while (n_samples / 2 < degree_out + 1) n_samples *= 2;
  auto sampler = [&](double t) {
    Complex z = r0 * Complex(std::cos(t), std::sin(t));
    Complex w = (a - z) / (1.0 - std::conj(a) * z);
    return eval(s, w);
  };
  return truncate(coefficients_from_samples(sampler, r0, n_samples), degree_out + 1);
}

double sup_on_circle(const ComplexSeries& s, double r, int n_samples) {
  double m = 0.0;
  for (int j = 0; j < n_samples; ++j) {
    double t = 2.0 * M_PI * double(j) / double(n_samples);
    m = std::max(m, std::abs(eval(s, r * Complex(std::cos(t), std::sin(t)))));
  }
  return m;
}

ComplexSeries arctan_series(Eigen::Index n_coeffs) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(std::max<Eigen::Index>(1, n_coeffs));
  for (Eigen::Index m = 0; 2 * m + 1 < v.size(); ++m)
    v[2 * m + 1] = (m % 2 == 0 ? 1.0 : -1.0) / double(2 * m + 1);
  return ComplexSeries(std::move(v));
}

ComplexSeries atanh_series(Eigen::Index n_coeffs) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(std::max<Eigen::Index>(1, n_coeffs));
  for (Eigen::Index m = 0; 2 * m + 1 < v.size(); ++m) v[2 * m + 1] = 1.0 / double(2 * m + 1);
  return ComplexSeries(std::move(v));
}

ComplexSeries cayley_numerator_series(Eigen::Index n_coeffs) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(std::max<Eigen::Index>(2, n_coeffs));
  for (Eigen::Index k = 1; k < v.size(); ++k) v[k] = 1.0;
  return ComplexSeries(std::move(v));
}

}  // namespace hdl
