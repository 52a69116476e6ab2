#include "physkit/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

#include "physkit/quadrature.hpp"

namespace physkit::specfun {

namespace {

bool is_nonpositive_integer(double x, double* which = nullptr) {
  double r = std::round(x);
  if (r <= 0.0 && std::abs(x - r) < 1e-12) {
    if (which) *which = r;
    return true;
  }
  return false;
}

}  // namespace

double pochhammer(double a, int n) {
  if (n < 0) throw std::domain_error("pochhammer: n must be nonnegative");
  double p = 1.0;
  for (int k = 0; k < n; ++k) p *= a + k;
  return p;
}

double lgamma_pos(double x) {
  if (x <= 0.0) throw std::domain_error("lgamma_pos: requires x > 0");
  static const double cof[14] = {
      57.1562356658629235,     -59.5979603554754912,
      14.1360979747417471,     -0.491913816097620199,
      0.339946499848118887e-4, 0.465236289270485756e-4,
      -0.983744753048795646e-4, 0.158088703224912494e-3,
      -0.210264441724104883e-3, 0.217439618115212643e-3,
      -0.164318106536763890e-3, 0.844182239838527433e-4,
      -0.261908384015814087e-4, 0.368991826595316234e-5};
  double y = x;
  double tmp = x + 5.24218750000000000;
  tmp = (x + 0.5) * std::log(tmp) - tmp;
  double ser = 0.999999999999997092;
  for (int j = 0; j < 14; ++j) ser += cof[j] / ++y;
  return tmp + std::log(2.5066282746310005 * ser / x);
}

double gamma_real(double x) {
  double pole;
  if (is_nonpositive_integer(x, &pole))
    throw std::domain_error("gamma_real: pole at x = " + std::to_string(pole));
  if (x >= 0.5) return std::exp(lgamma_pos(x));
  // Euler reflection for the left half line.
  return M_PI / (std::sin(M_PI * x) * std::exp(lgamma_pos(1.0 - x)));
}

double beta(double x, double y) {
  if (x <= 0.0 || y <= 0.0)
    throw std::domain_error("beta: requires positive arguments");
  return std::exp(lgamma_pos(x) + lgamma_pos(y) - lgamma_pos(x + y));
}

void HypergeometricSpec::validate() const {
  if (tolerance <= 0.0)
    throw std::domain_error("hyp_pfq: tolerance must be positive");
  if (max_terms < 1) throw std::domain_error("hyp_pfq: max_terms must be >= 1");
  for (double b : lower)
    if (is_nonpositive_integer(b))
      throw std::domain_error(
          "hyp_pfq: lower parameter is zero or a negative integer");
}

HypSum hyp_pfq(const HypergeometricSpec& spec) {
  spec.validate();
  const size_t p = spec.upper.size(), q = spec.lower.size();
  const double x = spec.x;

  // Terminating series: smallest nonpositive-integer upper parameter.
  int stop = -1;
  for (double a : spec.upper) {
    double r;
    if (is_nonpositive_integer(a, &r)) {
      int idx = static_cast<int>(-r);
      if (stop < 0 || idx < stop) stop = idx;
    }
  }

  if (stop >= 0) {
    quad::Kahan acc;
    double term = 1.0;
    for (int j = 0;; ++j) {
      acc.add(term);
      if (j == stop) return {acc.value(), stop + 1};
      double num = 1.0, den = 1.0;
      for (double a : spec.upper) num *= j + a;
      for (double b : spec.lower) den *= j + b;
      term *= num / den * (x / (j + 1));
    }
  }

  // Gauss point x = 1 for p = q+1: partial sum plus an Euler-Maclaurin tail.
  const bool gauss_point = (p == q + 1) && std::abs(x - 1.0) < 1e-14;
  double s = 0.0;
  if (gauss_point) {
    for (double b : spec.lower) s += b;
    for (double a : spec.upper) s -= a;
    if (s <= 0.05)
      throw std::runtime_error("hyp_pfq: series at x = 1 is not summable");
  } else if (p > q + 1 || (p == q + 1 && std::abs(x) >= 1.0)) {
    throw std::runtime_error("hyp_pfq: series does not converge at this x");
  }

  quad::Kahan acc;
  double term = 1.0;
  double prev_mag = HUGE_VAL;
  for (int j = 0; j < spec.max_terms; ++j) {
    acc.add(term);
    double mag = std::abs(term);
    if (!gauss_point && mag <= spec.tolerance * std::abs(acc.value()) &&
        prev_mag <= spec.tolerance * std::abs(acc.value()))
      return {acc.value(), j + 1};
    prev_mag = mag;
    double num = 1.0, den = 1.0;
    for (double a : spec.upper) num *= j + a;
    for (double b : spec.lower) den *= j + b;
    term *= num / den * (x / (j + 1));
    if (!std::isfinite(term))
      throw std::runtime_error("hyp_pfq: term overflow");
  }
  if (gauss_point) {
    // Terms decay like j^{-1-s}; tail ~ t_N (N/s + 1/2).
    double n = spec.max_terms;
    return {acc.value() + term * (n / s + 0.5), spec.max_terms};
  }
  throw std::runtime_error("hyp_pfq: stopping rule not met within max_terms");
}

std::complex<double> hyp_pfq_complex(const std::vector<double>& upper,
                                     const std::vector<double>& lower,
                                     std::complex<double> x, double tolerance,
                                     int max_terms) {
  HypergeometricSpec check;
  check.upper = upper;
  check.lower = lower;
  check.tolerance = tolerance;
  check.max_terms = max_terms;
  check.validate();
  int stop = -1;
  for (double a : upper) {
    double r;
    if (is_nonpositive_integer(a, &r)) {
      int idx = static_cast<int>(-r);
      if (stop < 0 || idx < stop) stop = idx;
    }
  }
  if (stop < 0 && upper.size() > lower.size() + 1)
    throw std::runtime_error("hyp_pfq: series does not converge at this x");
  if (stop < 0 && upper.size() == lower.size() + 1 && std::abs(x) >= 1.0)
    throw std::runtime_error("hyp_pfq: series does not converge at this x");

  std::complex<double> sum = 0.0, term = 1.0;
  double prev_mag = HUGE_VAL;
  for (int j = 0; j < max_terms; ++j) {
    sum += term;
    if (stop >= 0 && j == stop) return sum;
    double mag = std::abs(term);
    if (stop < 0 && mag <= tolerance * std::abs(sum) &&
        prev_mag <= tolerance * std::abs(sum))
      return sum;
    prev_mag = mag;
    double num = 1.0, den = 1.0;
    for (double a : upper) num *= j + a;
    for (double b : lower) den *= j + b;
    term *= num / den * (x / (j + 1.0));
    if (!std::isfinite(term.real()) || !std::isfinite(term.imag()))
      throw std::runtime_error("hyp_pfq: term overflow");
  }
  throw std::runtime_error("hyp_pfq: stopping rule not met within max_terms");
}

double hyp_2f1(double a, double b, double c, double x) {
  HypergeometricSpec s;
  s.upper = {a, b};
  s.lower = {c};
  s.x = x;
  return hyp_pfq(s).value;
}

double hyp_1f1(double a, double b, double x) {
  HypergeometricSpec s;
  s.upper = {a};
  s.lower = {b};
  s.x = x;
  return hyp_pfq(s).value;
}

namespace {

// P_l(x) by the three-term recursion.
double legendre_pl(int l, double x) {
  if (l == 0) return 1.0;
  if (l == 1) return x;
  double pm1 = x, pm2 = 1.0, p = x;
  for (int k = 2; k <= l; ++k) {
    p = ((2.0 * k - 1.0) * x * pm1 - (k - 1.0) * pm2) / k;
    pm2 = pm1;
    pm1 = p;
  }
  return p;
}

// P_l^m for m >= 0 with the Condon-Shortley factor.
double legendre_plm(int l, int m, double x) {
  // P_m^m = (-1)^m (2m-1)!! (1-x^2)^{m/2}
  double pmm = 1.0;
  if (m > 0) {
    double somx2 = std::sqrt((1.0 - x) * (1.0 + x));
    double fact = 1.0;
    for (int i = 0; i < m; ++i) {
      pmm *= -fact * somx2;
      fact += 2.0;
    }
  }
  if (l == m) return pmm;
  double pmmp1 = x * (2.0 * m + 1.0) * pmm;
  if (l == m + 1) return pmmp1;
  double pll = 0.0;
  for (int ll = m + 2; ll <= l; ++ll) {
    pll = (x * (2.0 * ll - 1.0) * pmmp1 - (ll + m - 1.0) * pmm) / (ll - m);
    pmm = pmmp1;
    pmmp1 = pll;
  }
  return pll;
}

}  // namespace

double legendre_p(int l, int m, double x) {
  if (l < 0) throw std::domain_error("legendre_p: l must be nonnegative");
  if (std::abs(m) > l)
    throw std::invalid_argument("legendre_p: requires |m| <= l");
  if (std::abs(x) > 1.0 + 1e-14)
    throw std::domain_error("legendre_p: requires |x| <= 1");
  x = std::clamp(x, -1.0, 1.0);
  if (m == 0) return legendre_pl(l, x);
  if (m > 0) return legendre_plm(l, m, x);
  // P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m
  int mm = -m;
  double ratio = std::exp(lgamma_pos(l - mm + 1.0) - lgamma_pos(l + mm + 1.0));
  double sign = (mm % 2 == 0) ? 1.0 : -1.0;
  return sign * ratio * legendre_plm(l, mm, x);
}

double legendre_p_derivative(int l, double x) {
  if (l == 0) return 0.0;
  // (1-x^2) P_l' = l (P_{l-1} - x P_l); at |x| = 1 use P_l'(+-1).
  double om = 1.0 - x * x;
  if (om < 1e-14) {
    double sign = (x > 0) ? 1.0 : ((l % 2 == 0) ? -1.0 : 1.0);
    return sign * 0.5 * l * (l + 1.0);
  }
  return l * (legendre_pl(l - 1, x) - x * legendre_pl(l, x)) / om;
}

std::complex<double> spherical_harmonic(int l, int m, double theta,
                                        double phi) {
  if (std::abs(m) > l)
    throw std::invalid_argument("spherical_harmonic: requires |m| <= l");
  if (theta < -1e-12 || theta > M_PI + 1e-12)
    throw std::domain_error("spherical_harmonic: requires 0 <= theta <= pi");
  int am = std::abs(m);
  double norm = std::sqrt((2.0 * l + 1.0) / (4.0 * M_PI) *
                          std::exp(lgamma_pos(l - am + 1.0) -
                                   lgamma_pos(l + am + 1.0)));
  double plm = legendre_plm(l, am, std::cos(theta));
  std::complex<double> e(std::cos(am * phi), std::sin(am * phi));
  std::complex<double> y = norm * plm * e;
  if (m >= 0) return y;
  // Y_l^{-m} = (-1)^m conj(Y_l^m)
  double sign = (am % 2 == 0) ? 1.0 : -1.0;
  return sign * std::conj(y);
}

double inner_product(const RealFn& f, const RealFn& g, const RealFn& rho,
                     double a, double b, double tol) {
  return quad::integrate([&](double x) { return f(x) * g(x) * rho(x); }, a, b,
                         tol);
}

OrthogonalSystem gram_schmidt_functions(const std::vector<RealFn>& fs,
                                        const RealFn& rho, double a, double b,
                                        double tol) {
  const size_t n = fs.size();
  // Gram matrix of the inputs; every later inner product is a bilinear form
  // in these entries.
  std::vector<std::vector<double>> G(n, std::vector<double>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j)
      G[i][j] = G[j][i] = inner_product(fs[i], fs[j], rho, a, b, tol);

  // phi_k = sum_j M[k][j] f_j
  std::vector<std::vector<double>> M(n, std::vector<double>(n, 0.0));
  std::vector<double> norms(n);
  auto form = [&](const std::vector<double>& u, const std::vector<double>& v) {
    double s = 0.0;
    for (size_t i = 0; i < n; ++i) {
      if (u[i] == 0.0) continue;
      double row = 0.0;
      for (size_t j = 0; j < n; ++j) row += G[i][j] * v[j];
      s += u[i] * row;
    }
    return s;
  };

  double scale = std::abs(G[0][0]);
  for (size_t k = 0; k < n; ++k) {
    M[k][k] = 1.0;
    std::vector<double> fk(n, 0.0);
    fk[k] = 1.0;
    for (size_t j = 0; j < k; ++j) {
      double c = form(fk, M[j]) / norms[j];
      for (size_t i = 0; i <= j; ++i) M[k][i] -= c * M[j][i];
    }
    norms[k] = form(M[k], M[k]);
    if (!(norms[k] > tol * std::max(1.0, scale)))
      throw std::runtime_error(
          "gram_schmidt_functions: degenerate input at index " +
          std::to_string(k));
  }

  OrthogonalSystem out;
  out.a = a;
  out.b = b;
  out.weight = rho;
  out.norms = norms;
  auto inputs = std::make_shared<std::vector<RealFn>>(fs);
  for (size_t k = 0; k < n; ++k) {
    std::vector<double> row(M[k].begin(), M[k].begin() + k + 1);
    out.functions.push_back([inputs, row](double x) {
      double s = 0.0;
      for (size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0.0) s += row[j] * (*inputs)[j](x);
      return s;
    });
  }
  return out;
}

double classical_polynomial(PolyKind kind, int n, double alpha, double x) {
  if (n < 0) throw std::invalid_argument("classical_polynomial: n >= 0");
  switch (kind) {
    case PolyKind::hermite: {
      if (n % 2 == 0) {
        int m = n / 2;
        double pre = ((m % 2 == 0) ? 1.0 : -1.0) *
                     std::exp(lgamma_pos(n + 1.0) - lgamma_pos(m + 1.0));
        return pre * hyp_1f1(-m, 0.5, x * x);
      }
      int m = (n - 1) / 2;
      double pre = 2.0 * x * ((m % 2 == 0) ? 1.0 : -1.0) *
                   std::exp(lgamma_pos(n + 1.0) - lgamma_pos(m + 1.0));
      return pre * hyp_1f1(-m, 1.5, x * x);
    }
    case PolyKind::laguerre:
      return hyp_1f1(-n, 1.0, x);
    case PolyKind::assoc_laguerre: {
      if (alpha <= -1.0)
        throw std::invalid_argument("classical_polynomial: alpha > -1");
      double binom = std::exp(lgamma_pos(n + alpha + 1.0) -
                              lgamma_pos(n + 1.0) - lgamma_pos(alpha + 1.0));
      return binom * hyp_1f1(-n, alpha + 1.0, x);
    }
    case PolyKind::chebyshev1:
      return hyp_2f1(-n, n, 0.5, 0.5 * (1.0 - x));
  }
  throw std::invalid_argument("classical_polynomial: unknown kind");
}

}  // namespace physkit::specfun
