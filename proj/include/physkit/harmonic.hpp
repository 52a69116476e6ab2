#ifndef PHYSKIT_HARMONIC_HPP
#define PHYSKIT_HARMONIC_HPP

#include <complex>
#include <functional>
#include <vector>

namespace physkit::harmonic {

using RealFn = std::function<double(double)>;
using cplx = std::complex<double>;

struct FourierConvention {
  double A = 1.0;  // forward kernel e^{-iAkx}, scale A/(2 pi B)
  double B = 1.0;  // inverse kernel e^{+iAkx}, scale B
};

struct FourierSeries {
  std::vector<double> a;  // a_0..a_K
  std::vector<double> b;  // b_1..b_K (b[0] unused, kept 0)
  double L = 0.0;
  double eval(double x, int kmax = -1) const;
};

// Coefficients of f on [-L/2, L/2]:
//   a_k = (2/L) int f cos(2 pi k x / L),  b_k likewise with sin.
// Optional interior kink abscissae split the quadrature panels.
FourierSeries fourier_series_coeffs(const RealFn& f, double L, int K,
                                    const std::vector<double>& kinks = {});

// Exponential coefficients c_{-K}..c_K with kernel e^{-2 pi i k x / L} / L.
std::vector<cplx> exponential_fourier_coeffs(const RealFn& f, double L, int K);

// Outward-doubling search from [-1,1] for a window with |f(+-T)| < 1e-14.
double decay_window(const RealFn& f, double threshold = 1e-14);

// (A/(2 pi B)) int f(x') e^{-iAkx'} dx' over the detected (or given) window.
cplx fourier_transform_numeric(const RealFn& f, double k,
                               const FourierConvention& conv,
                               double window = 0.0);

// B int F(k) e^{+iAkx} dk, window detected on |F| unless given.
cplx fourier_inverse_numeric(const std::function<cplx(double)>& F, double x,
                             const FourierConvention& conv, double window);

// Legendre expansion coefficients a_l = (2l+1)/2 int_{-1}^{1} f P_l dx.
std::vector<double> legendre_expand(const RealFn& f, int lmax,
                                    const std::vector<double>& kinks = {});

double legendre_series_eval(const std::vector<double>& coeffs, double x);

}  // namespace physkit::harmonic

#endif
