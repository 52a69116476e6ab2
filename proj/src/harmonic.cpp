#include "physkit/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "physkit/quadrature.hpp"
#include "physkit/specfun.hpp"

namespace physkit::harmonic {

namespace {

// Integrate over [lo,hi] with panels split at the supplied interior kinks.
double integrate_split(const std::function<double(double)>& f, double lo,
                       double hi, const std::vector<double>& kinks,
                       double tol = 1e-12) {
  std::vector<double> cuts{lo};
  for (double k : kinks)
    if (k > lo && k < hi) cuts.push_back(k);
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i)
    total += quad::integrate(f, cuts[i], cuts[i + 1], tol);
  return total;
}

}  // namespace

double FourierSeries::eval(double x, int kmax) const {
  int K = static_cast<int>(a.size()) - 1;
  if (kmax >= 0) K = std::min(K, kmax);
  double s = 0.5 * a[0];
  for (int k = 1; k <= K; ++k) {
    double arg = 2.0 * M_PI * k * x / L;
    s += a[k] * std::cos(arg);
    if (k < static_cast<int>(b.size())) s += b[k] * std::sin(arg);
  }
  return s;
}

FourierSeries fourier_series_coeffs(const RealFn& f, double L, int K,
                                    const std::vector<double>& kinks) {
  if (L <= 0.0) throw std::domain_error("fourier_series_coeffs: L > 0");
  if (K < 0) throw std::domain_error("fourier_series_coeffs: K >= 0");
  FourierSeries out;
  out.L = L;
  out.a.resize(K + 1);
  out.b.assign(K + 1, 0.0);
  const double lo = -0.5 * L, hi = 0.5 * L;
  for (int k = 0; k <= K; ++k) {
    double w = 2.0 * M_PI * k / L;
    out.a[k] = 2.0 / L *
               integrate_split([&](double x) { return f(x) * std::cos(w * x); },
                               lo, hi, kinks);
    if (k > 0)
      out.b[k] = 2.0 / L *
                 integrate_split(
                     [&](double x) { return f(x) * std::sin(w * x); }, lo, hi,
                     kinks);
    if (!std::isfinite(out.a[k]) || !std::isfinite(out.b[k]))
      throw std::runtime_error("fourier_series_coeffs: quadrature failed");
  }
  return out;
}

std::vector<cplx> exponential_fourier_coeffs(const RealFn& f, double L,
                                             int K) {
  std::vector<cplx> c(2 * K + 1);
  for (int k = -K; k <= K; ++k) {
    double w = 2.0 * M_PI * k / L;
    double re = quad::integrate(
        [&](double x) { return f(x) * std::cos(w * x); }, -0.5 * L, 0.5 * L);
    double im = quad::integrate(
        [&](double x) { return -f(x) * std::sin(w * x); }, -0.5 * L, 0.5 * L);
    c[k + K] = cplx(re, im) / L;
  }
  return c;
}

double decay_window(const RealFn& f, double threshold) {
  double T = 1.0;
  for (int i = 0; i < 44; ++i) {
    if (std::abs(f(T)) < threshold && std::abs(f(-T)) < threshold) return T;
    T *= 2.0;
  }
  throw std::runtime_error(
      "decay_window: function does not decay below the threshold");
}

cplx fourier_transform_numeric(const RealFn& f, double k,
                               const FourierConvention& conv, double window) {
  if (conv.A == 0.0 || conv.B == 0.0)
    throw std::domain_error("fourier_transform_numeric: A, B must be nonzero");
  double T = window > 0.0 ? window : decay_window(f);
  double scale = conv.A / (2.0 * M_PI * conv.B);
  cplx val = quad::integrate_c(
      [&](double x) {
        return f(x) * std::exp(cplx(0.0, -conv.A * k * x));
      },
      -T, T, 1e-12, 16);
  return scale * val;
}

cplx fourier_inverse_numeric(const std::function<cplx(double)>& F, double x,
                             const FourierConvention& conv, double window) {
  if (window <= 0.0)
    throw std::domain_error("fourier_inverse_numeric: window > 0 required");
  return conv.B * quad::integrate_c(
                      [&](double k) {
                        return F(k) * std::exp(cplx(0.0, conv.A * k * x));
                      },
                      -window, window, 1e-12, 16);
}

std::vector<double> legendre_expand(const RealFn& f, int lmax,
                                    const std::vector<double>& kinks) {
  if (lmax < 0) throw std::domain_error("legendre_expand: lmax >= 0");
  std::vector<double> a(lmax + 1);
  for (int l = 0; l <= lmax; ++l) {
    auto g = [&](double x) { return f(x) * specfun::legendre_p(l, 0, x); };
    a[l] = 0.5 * (2.0 * l + 1.0) * integrate_split(g, -1.0, 1.0, kinks);
  }
  return a;
}

double legendre_series_eval(const std::vector<double>& coeffs, double x) {
  double s = 0.0;
  for (size_t l = 0; l < coeffs.size(); ++l)
    s += coeffs[l] * specfun::legendre_p(static_cast<int>(l), 0, x);
  return s;
}

}  // namespace physkit::harmonic
