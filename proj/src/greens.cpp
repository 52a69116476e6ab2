#include "physkit/greens.hpp"

#include <cmath>
#include <stdexcept>

#include "physkit/quadrature.hpp"

namespace physkit::greens {

namespace {
double heaviside(double x) { return x >= 0.0 ? 1.0 : 0.0; }
}

double GreensKernel::operator()(double x, double xp) const {
  if (rep == Rep::closed_form) return closed(x, xp);
  return spectral_green(pairs, x, xp);
}

double spectral_green(const std::vector<std::pair<double, RealFn>>& pairs,
                      double x, double xp) {
  quad::Kahan acc;
  for (const auto& [lambda, psi] : pairs) {
    if (lambda == 0.0)
      throw std::domain_error("spectral_green: zero eigenvalue in the sum");
    acc.add(psi(x) * psi(xp) / lambda);
  }
  return acc.value();
}

std::pair<double, double> spectral_green_with_tail(
    const std::vector<std::pair<double, RealFn>>& pairs, double x, double xp) {
  double value = spectral_green(pairs, x, xp);
  // last few retained terms; a single term can sit on a node of psi_J
  double tail = 0.0;
  size_t from = pairs.size() > 3 ? pairs.size() - 3 : 0;
  for (size_t j = from; j < pairs.size(); ++j) {
    const auto& [lambda, psi] = pairs[j];
    tail = std::max(tail, std::abs(psi(x) * psi(xp) / lambda));
  }
  return {value, tail};
}

GreensKernel make_spectral(std::vector<std::pair<double, RealFn>> pairs) {
  GreensKernel k;
  k.rep = GreensKernel::Rep::spectral;
  k.pairs = std::move(pairs);
  return k;
}

GreensKernel catalog_kernel(const std::string& name) {
  GreensKernel k;
  k.rep = GreensKernel::Rep::closed_form;
  k.causal = true;
  if (name == "sinh-ic") {
    k.closed = [](double x, double xp) {
      return heaviside(x - xp) * std::sinh(x - xp);
    };
  } else if (name == "first-order-exp") {
    k.closed = [](double t, double tp) {
      return heaviside(t - tp) * std::exp(t - tp);
    };
  } else if (name == "harmonic-ic") {
    k.closed = [](double t, double tp) {
      return heaviside(t - tp) * std::sin(t - tp);
    };
  } else {
    throw std::invalid_argument("catalog_kernel: unknown kernel '" + name +
                                "'");
  }
  return k;
}

std::vector<double> solve_via_green(const GreensKernel& kernel, const RealFn& f,
                                    double a, double b,
                                    const std::vector<double>& grid,
                                    double tol) {
  std::vector<double> y;
  y.reserve(grid.size());
  for (double x : grid) {
    double hi = b;
    if (kernel.causal) hi = std::min(b, x);  // H(x-x') kills the tail exactly
    if (!std::isfinite(hi))
      throw std::domain_error(
          "solve_via_green: infinite domain requires a causal kernel");
    auto gk = [&](double xp) { return kernel(x, xp) * f(xp); };
    auto piece = [&](double lo2, double hi2) {
      auto [v, delta] = quad::integrate_err(gk, lo2, hi2, tol);
      if (!std::isfinite(v) || delta > 1e-4 * std::max(1.0, std::abs(v)))
        throw std::runtime_error(
            "solve_via_green: quadrature did not converge");
      return v;
    };
    double val = 0.0;
    if (hi > a) {
      // Split at the Heaviside kink x' = x when it lies inside [a, hi].
      if (x > a && x < hi)
        val = piece(a, x) + piece(x, hi);
      else
        val = piece(a, hi);
    }
    y.push_back(val);
  }
  return y;
}

double beam_deflection(double c, double L, double x, int jmax) {
  if (jmax < 1) throw std::domain_error("beam_deflection: J >= 1 required");
  if (x < 0.0 || x > L)
    throw std::domain_error("beam_deflection: requires 0 <= x <= L");
  quad::Kahan acc;
  for (int j = 1; j <= jmax; ++j) {
    double s = std::sin(0.5 * M_PI * j);  // 0 for even j, +-1 for odd j
    acc.add(std::sin(M_PI * j * x / L) * s * s / std::pow(double(j), 5));
  }
  return 4.0 * c * std::pow(L, 4) / std::pow(M_PI, 5) * acc.value();
}

}  // namespace physkit::greens
