#ifndef PHYSKIT_QUADRATURE_HPP
#define PHYSKIT_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace physkit::quad {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule on [-1,1], cached per n.
const Rule& gauss_legendre(int n);

// n-point Gauss-Laguerre rule for the weight e^{-t} on [0,inf), cached per n.
// Weights include the e^{-t} factor: int_0^inf e^{-t} g(t) dt = sum w_i g(t_i).
const Rule& gauss_laguerre(int n);

// Composite 64-node Gauss-Legendre over [a,b]; the panel count is doubled
// until two successive refinements agree to tol (abs-or-rel), then the finer
// value is returned.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-11, int max_doublings = 14);

std::complex<double> integrate_c(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double tol = 1e-11, int max_doublings = 14);

// Same, returning (value, |last refinement delta|).
std::pair<double, double> integrate_err(const std::function<double(double)>& f,
                                        double a, double b, double tol = 1e-11,
                                        int max_doublings = 14);

// Uniform trapezoid over one period [a,b] with f(a)=f(b); spectrally accurate
// for smooth periodic integrands.
double integrate_periodic(const std::function<double(double)>& f, double a,
                          double b, int n);

// int_0^inf e^{-t} g(t) dt by n-node Gauss-Laguerre.
double laguerre_integrate(const std::function<double(double)>& g, int n = 64);

// Central-difference derivative of order 0..4, 4th-order accurate stencils.
// h == 0 selects the default step 1e-3 * max(1,|x|).
double derivative(const std::function<double(double)>& f, double x, int order,
                  double h = 0.0);

// Compensated (Kahan) accumulator for long alternating sums.
struct Kahan {
  double sum = 0.0, c = 0.0;
  void add(double term) {
    double y = term - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

}  // namespace physkit::quad

#endif
