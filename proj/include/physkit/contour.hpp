#ifndef PHYSKIT_CONTOUR_HPP
#define PHYSKIT_CONTOUR_HPP

#include <complex>
#include <functional>

namespace physkit::contour {

using cplx = std::complex<double>;
using CFn = std::function<cplx(cplx)>;

struct Contour {
  std::function<cplx(double)> z;   // path
  std::function<cplx(double)> dz;  // dz/dt
  double t0 = 0.0, t1 = 1.0;
  bool periodic = false;

  static Contour circle(cplx center, double radius);
  static Contour segment(cplx a, cplx b);

  // dz must match finite differences of z at 16 samples to 1e-8.
  void validate() const;
};

struct ContourResult {
  cplx value;
  double err_estimate;  // |doubled-n cross-check delta|
};

// Trapezoid sum for periodic paths, composite Gauss panels otherwise;
// the value is recomputed with doubled n and the delta reported.
ContourResult contour_integrate(const CFn& f, const Contour& c, int n = 256);

// Laurent coefficient a_k of f about z0 from a circle of radius r.
cplx laurent_coefficient(const CFn& f, cplx z0, int k, double r, int n = 256);

// Residue a_{-1}.
cplx residue_at(const CFn& f, cplx z0, double r, int n = 256);

// n-th derivative by Cauchy's differentiation formula.
cplx cauchy_derivative(const CFn& f, cplx z0, int order, double r,
                       int n = 256);

}  // namespace physkit::contour

#endif
