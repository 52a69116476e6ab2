#ifndef PHYSKIT_GREENS_HPP
#define PHYSKIT_GREENS_HPP

#include <functional>
#include <string>
#include <vector>

namespace physkit::greens {

using RealFn = std::function<double(double)>;
using Kernel2 = std::function<double(double, double)>;

struct GreensKernel {
  enum class Rep { closed_form, spectral };
  Rep rep = Rep::closed_form;
  Kernel2 closed;  // G(x, x')
  // spectral: pairs (lambda_j, psi_j), truncated at J = pairs.size()
  std::vector<std::pair<double, RealFn>> pairs;
  // causal kernels carry a Heaviside H(x - x') factor, so the source
  // integral truncates at x' = x
  bool causal = false;

  double operator()(double x, double xp) const;
};

// Truncated spectral sum  sum_j psi_j(x) psi_j(x') / lambda_j.
double spectral_green(const std::vector<std::pair<double, RealFn>>& pairs,
                      double x, double xp);

// Same value together with the magnitude of the last retained term, the
// alternating-tail estimate of the truncation error.
std::pair<double, double> spectral_green_with_tail(
    const std::vector<std::pair<double, RealFn>>& pairs, double x, double xp);

GreensKernel make_spectral(std::vector<std::pair<double, RealFn>> pairs);

// Catalog: "sinh-ic" (d^2/dx^2 - 1), "first-order-exp" (d/dt - 1, y(0)=0),
// "harmonic-ic" (d^2/dt^2 + 1, y(0)=y'(0)=0).
GreensKernel catalog_kernel(const std::string& name);

// y(x) = int_a^b G(x,x') f(x') dx' at each grid point, with the integration
// domain split at the kink x' = x. b may be +infinity for causal kernels.
std::vector<double> solve_via_green(const GreensKernel& kernel, const RealFn& f,
                                    double a, double b,
                                    const std::vector<double>& grid,
                                    double tol = 1e-9);

// Euler-Bernoulli beam deflection under constant load c:
// (4 c L^4 / pi^5) sum_{j<=J} j^{-5} sin(pi j x / L) sin^2(pi j / 2).
double beam_deflection(double c, double L, double x, int jmax);

}  // namespace physkit::greens

#endif
