#include "physkit/fuchsia.hpp"

#include <cmath>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>

#include "physkit/quadrature.hpp"

namespace physkit::fuchsia {

namespace {
constexpr double kTiny = 1e-13;

bool finite_c(cplx v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}
}  // namespace

cplx RationalCoeffs::p1(cplx z) const {
  cplx s = 0.0;
  for (const auto& p : poles) s += p.A / (z - p.x);
  return s;
}

cplx RationalCoeffs::p2(cplx z) const {
  cplx s = 0.0;
  for (const auto& p : poles) {
    cplx d = z - p.x;
    s += p.B / (d * d) + p.C / d;
  }
  return s;
}

bool LinearODE2::first_order_near(cplx x0) const {
  for (int i = 1; i <= 5; ++i) {
    cplx z = x0 + cplx(0.13 * i, 0.07 * i);
    if (std::abs(a2(z)) > kTiny * std::max(1.0, std::abs(a1(z)))) return false;
  }
  return true;
}

void LinearODE2::validate_rational(unsigned seed) const {
  if (!rational) return;
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  int checked = 0;
  while (checked < 16) {
    cplx z(u(rng), u(rng));
    bool near_pole = false;
    for (const auto& p : rational->poles)
      if (std::abs(z - p.x) < 0.2) near_pole = true;
    if (near_pole || std::abs(a2(z)) < 1e-6) continue;
    cplx d1 = rational->p1(z) - p1(z);
    cplx d2 = rational->p2(z) - p2(z);
    double s1 = std::max(1.0, std::abs(p1(z)));
    double s2 = std::max(1.0, std::abs(p2(z)));
    if (std::abs(d1) > 1e-12 * s1 || std::abs(d2) > 1e-12 * s2)
      throw std::runtime_error(
          "LinearODE2: rational descriptors disagree with the coefficients");
    ++checked;
  }
}

namespace {

enum class LimitStatus { ok, diverged, eval_failure };

// Richardson (Neville, ratio 2) limit of g(h 2^{-k}), k = 0..8.
LimitStatus richardson_limit(const std::function<cplx(double)>& g, double h,
                             cplx* out) {
  constexpr int K = 9;
  cplx tab[K];
  for (int k = 0; k < K; ++k) {
    tab[k] = g(h * std::ldexp(1.0, -k));
    if (!finite_c(tab[k])) return LimitStatus::eval_failure;
  }
  // Neville elimination of powers of h.
  cplx prev_diag = tab[K - 1];
  for (int lvl = 1; lvl < K; ++lvl) {
    double fac = std::ldexp(1.0, lvl);  // 2^lvl
    for (int k = 0; k + lvl < K; ++k)
      tab[k] = (fac * tab[k + 1] - tab[k]) / (fac - 1.0);
    prev_diag = tab[0];
  }
  // Settledness: redo with one level fewer and compare diagonals.
  cplx tab2[K];
  for (int k = 0; k < K - 1; ++k) tab2[k] = g(h * std::ldexp(1.0, -k));
  for (int lvl = 1; lvl < K - 1; ++lvl) {
    double fac = std::ldexp(1.0, lvl);
    for (int k = 0; k + lvl < K - 1; ++k)
      tab2[k] = (fac * tab2[k + 1] - tab2[k]) / (fac - 1.0);
  }
  if (std::abs(tab[0] - tab2[0]) > 1e-3 * std::max(1.0, std::abs(tab[0])))
    return LimitStatus::diverged;
  *out = tab[0];
  return LimitStatus::ok;
}

// True if |g| stays bounded as h decreases (no growth across decades).
bool bounded_near(const std::function<cplx(double)>& g, double h) {
  double m0 = std::abs(g(h));
  double m1 = std::abs(g(h / 16.0));
  double m2 = std::abs(g(h / 256.0));
  if (!std::isfinite(m1) || !std::isfinite(m2)) return false;
  return m2 <= 4.0 * std::max(1.0, m0) && m1 <= 4.0 * std::max(1.0, m0);
}

PointClass classify_from_p(const std::function<cplx(cplx)>& p1fn,
                           const std::function<cplx(cplx)>& p2fn, cplx x0,
                           double h, const RationalCoeffs* rat) {
  PointClass out{};
  if (rat) {
    for (const auto& p : rat->poles) {
      if (std::abs(p.x - x0) < 1e-10) {
        out.kind = PointKind::regular_singular;
        out.alpha0 = p.A;
        out.beta0 = p.B;
        return out;
      }
    }
    out.kind = PointKind::ordinary;
    return out;
  }
  auto g1 = [&](double hh) { return hh * p1fn(x0 + hh); };
  auto g2 = [&](double hh) { return hh * hh * p2fn(x0 + hh); };
  cplx a0c, b0c;
  LimitStatus s1 = richardson_limit(g1, h, &a0c);
  LimitStatus s2 = (s1 == LimitStatus::eval_failure)
                       ? s1
                       : richardson_limit(g2, h, &b0c);
  if (s1 == LimitStatus::eval_failure || s2 == LimitStatus::eval_failure)
    throw std::runtime_error(
        "classify_point: coefficient evaluation failed near the point");
  if (s1 == LimitStatus::diverged || s2 == LimitStatus::diverged) {
    out.kind = PointKind::irregular_singular;
    return out;
  }
  auto f1 = [&](double hh) { return p1fn(x0 + hh); };
  auto f2 = [&](double hh) { return p2fn(x0 + hh); };
  if (std::abs(a0c) < 1e-9 && std::abs(b0c) < 1e-9 && bounded_near(f1, h) &&
      bounded_near(f2, h)) {
    out.kind = PointKind::ordinary;
    return out;
  }
  out.kind = PointKind::regular_singular;
  out.alpha0 = a0c;
  out.beta0 = b0c;
  return out;
}

}  // namespace

PointClass classify_point(const LinearODE2& ode, cplx x0, double h) {
  ode.validate_rational();
  // Fast ordinary-point path: a2(x0) != 0 and finite p's nearby.
  cplx a2v = ode.a2(x0);
  if (finite_c(a2v) && std::abs(a2v) > 1e-10) {
    cplx p1v = ode.p1(x0), p2v = ode.p2(x0);
    if (finite_c(p1v) && finite_c(p2v)) return {PointKind::ordinary};
  }
  auto p1fn = [&](cplx z) { return ode.p1(z); };
  auto p2fn = [&](cplx z) { return ode.p2(z); };
  return classify_from_p(p1fn, p2fn, x0, h,
                         ode.rational ? &*ode.rational : nullptr);
}

LinearODE2 transform_to_infinity(const LinearODE2& ode) {
  LinearODE2 t;
  auto base = std::make_shared<LinearODE2>(ode);
  t.a2 = [](cplx) { return cplx(1.0); };
  t.a1 = [base](cplx tt) {
    return 2.0 / tt - base->p1(1.0 / tt) / (tt * tt);
  };
  t.a0 = [base](cplx tt) {
    return base->p2(1.0 / tt) / (tt * tt * tt * tt);
  };
  return t;
}

PointClass classify_point_at_infinity(const LinearODE2& ode, double h) {
  LinearODE2 t = transform_to_infinity(ode);
  auto p1fn = [&](cplx z) { return t.a1(z); };
  auto p2fn = [&](cplx z) { return t.a0(z); };
  return classify_from_p(p1fn, p2fn, cplx(0.0), h, nullptr);
}

std::pair<cplx, cplx> characteristic_exponents(cplx alpha0, cplx beta0) {
  cplx disc = std::sqrt((1.0 - alpha0) * (1.0 - alpha0) - 4.0 * beta0);
  cplx s1 = 0.5 * (1.0 - alpha0 + disc);
  cplx s2 = 0.5 * (1.0 - alpha0 - disc);
  if (s1.real() < s2.real() ||
      (s1.real() == s2.real() && s1.imag() < s2.imag()))
    std::swap(s1, s2);
  return {s1, s2};
}

cplx PowerSeriesSolution::eval(cplx x) const {
  cplx u = x - x0;
  cplx s = 0.0;
  for (size_t i = coeffs.size(); i-- > 0;) s = s * u + coeffs[i];
  return std::pow(u, sigma) * s;
}

cplx PowerSeriesSolution::eval_derivative(cplx x, int order) const {
  // Termwise: d^m/dx^m sum w_l u^{l+sigma}.
  cplx u = x - x0;
  cplx s = 0.0;
  for (size_t l = 0; l < coeffs.size(); ++l) {
    cplx e = sigma + static_cast<double>(l);
    cplx fac = 1.0;
    for (int m = 0; m < order; ++m) fac *= e - static_cast<double>(m);
    s += coeffs[l] * fac * std::pow(u, e - static_cast<double>(order));
  }
  return s;
}

namespace {

// Taylor coefficients 0..nmax of an analytic function around x0 via circle
// quadrature (trapezoid in the angle).
std::vector<cplx> taylor_coeffs(const std::function<cplx(cplx)>& g, cplx x0,
                                double r, int nmax) {
  int m = std::max(256, 4 * (nmax + 1));
  std::vector<cplx> vals(m);
  for (int i = 0; i < m; ++i) {
    double th = 2.0 * M_PI * i / m;
    cplx z = x0 + r * std::exp(cplx(0.0, th));
    vals[i] = g(z);
    if (!finite_c(vals[i]))
      throw std::runtime_error("frobenius_solve: coefficient sample not finite");
  }
  std::vector<cplx> out(nmax + 1);
  for (int j = 0; j <= nmax; ++j) {
    cplx acc = 0.0;
    for (int i = 0; i < m; ++i) {
      double th = 2.0 * M_PI * i / m;
      acc += vals[i] * std::exp(cplx(0.0, -j * th));
    }
    out[j] = acc / (static_cast<double>(m) * std::pow(r, j));
    // Strip quadrature noise from exact zeros.
    if (std::abs(out[j]) < 1e-13) out[j] = 0.0;
  }
  return out;
}

}  // namespace

PowerSeriesSolution frobenius_solve(const LinearODE2& ode, cplx x0, cplx sigma,
                                    int nterms, double series_radius) {
  if (nterms < 1) throw std::invalid_argument("frobenius_solve: nterms >= 1");
  double r = series_radius;
  if (r <= 0.0) {
    r = 0.5;
    if (ode.rational) {
      double dmin = HUGE_VAL;
      for (const auto& p : ode.rational->poles) {
        double d = std::abs(p.x - x0);
        if (d > 1e-10) dmin = std::min(dmin, d);
      }
      if (std::isfinite(dmin)) r = 0.5 * dmin;
    }
  }

  PowerSeriesSolution sol;
  sol.x0 = x0;
  sol.sigma = sigma;
  sol.coeffs.assign(nterms + 1, cplx(0.0));
  sol.coeffs[0] = 1.0;
  if (ode.rational) {
    double dmin = HUGE_VAL;
    for (const auto& p : ode.rational->poles) {
      double d = std::abs(p.x - x0);
      if (d > 1e-10) dmin = std::min(dmin, d);
    }
    if (std::isfinite(dmin)) sol.radius_hint = dmin;
  }

  if (ode.first_order_near(x0)) {
    // a1 y' + a0 y = 0: q = a0/a1, A_q = (x-x0) q analytic.
    auto aq = [&](cplx z) { return (z - x0) * ode.a0(z) / ode.a1(z); };
    auto q = taylor_coeffs(aq, x0, r, nterms);
    // Indicial: sigma + q0 = 0 expected; recursion
    //   w_n (n + sigma + q0) = - sum_{l<n} q_{n-l} w_l.
    for (int n = 1; n <= nterms; ++n) {
      cplx rhs = 0.0;
      for (int l = 0; l < n; ++l) rhs += q[n - l] * sol.coeffs[l];
      cplx den = static_cast<double>(n) + sigma + q[0];
      if (std::abs(den) < 1e-10) {
        if (std::abs(rhs) < 1e-10) continue;  // consistent resonance: w_n = 0
        throw std::runtime_error("frobenius_solve: resonance at n = " +
                                 std::to_string(n));
      }
      sol.coeffs[n] = -rhs / den;
    }
    return sol;
  }

  auto A1 = [&](cplx z) { return (z - x0) * ode.p1(z); };
  auto A2 = [&](cplx z) { return (z - x0) * (z - x0) * ode.p2(z); };
  auto alpha = taylor_coeffs(A1, x0, r, nterms);
  auto beta = taylor_coeffs(A2, x0, r, nterms);

  auto f0 = [&](cplx s) { return s * (s - 1.0) + alpha[0] * s + beta[0]; };
  auto fk = [&](int k, cplx s) { return alpha[k] * s + beta[k]; };

  for (int n = 1; n <= nterms; ++n) {
    cplx rhs = 0.0;
    for (int l = 0; l < n; ++l)
      rhs += sol.coeffs[l] * fk(n - l, sigma + static_cast<double>(l));
    cplx den = f0(sigma + static_cast<double>(n));
    if (std::abs(den) < 1e-10) {
      if (std::abs(rhs) < 1e-10) continue;  // consistent resonance: w_n = 0
      throw std::runtime_error("frobenius_solve: resonance at n = " +
                               std::to_string(n));
    }
    sol.coeffs[n] = -rhs / den;
  }
  return sol;
}

std::vector<double> dalembert_second_solution(const LinearODE2& ode,
                                              const RealFn& y1,
                                              const RealFn& dy1,
                                              const std::vector<double>& grid) {
  if (grid.size() < 2)
    throw std::invalid_argument("dalembert_second_solution: need a grid");
  for (double x : grid)
    if (std::abs(y1(x)) < 1e-12 * std::max(1.0, std::abs(x)))
      throw std::runtime_error(
          "dalembert_second_solution: y1 vanishes on the grid at x = " +
          std::to_string(x));

  // g = 2 y1'/y1 + p1; v = exp(-int_{x_r}^x g), anchored at the first
  // grid point.
  auto g = [&](double s) {
    double p1 = (ode.a1(cplx(s)) / ode.a2(cplx(s))).real();
    return 2.0 * dy1(s) / y1(s) + p1;
  };
  const auto& rule = quad::gauss_legendre(64);
  auto gl64 = [&](const std::function<double(double)>& f, double a, double b) {
    double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
    double acc = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i)
      acc += rule.weights[i] * f(mid + hw * rule.nodes[i]);
    return acc * hw;
  };

  std::vector<double> y2(grid.size());
  y2[0] = 0.0;
  double V = 0.0;        // int_{xr}^{x_i} v
  double I_at_lo = 0.0;  // int_{xr}^{x_i} g
  for (size_t i = 1; i < grid.size(); ++i) {
    double lo = grid[i - 1], hi = grid[i];
    auto v = [&](double s) {
      return std::exp(-(I_at_lo + gl64(g, lo, s)));
    };
    V += gl64(v, lo, hi);
    I_at_lo += gl64(g, lo, hi);
    y2[i] = y1(hi) * V;
  }
  return y2;
}

SturmLiouvilleForm to_sturm_liouville(const LinearODE2& ode, const RealFn& f,
                                      double x_ref, const RealFn& weight) {
  auto base = std::make_shared<LinearODE2>(ode);
  auto ratio = [base](double x) {
    cplx z(x);
    return (base->a1(z) / base->a2(z)).real();
  };
  auto p = [base, ratio, x_ref](double x) {
    return std::exp(quad::integrate(ratio, x_ref, x));
  };
  SturmLiouvilleForm out;
  out.p = p;
  out.q = [base, p](double x) {
    cplx z(x);
    return p(x) * (base->a0(z) / base->a2(z)).real();
  };
  RealFn ff = f ? f : RealFn([](double) { return 0.0; });
  out.F = [base, p, ff](double x) {
    cplx z(x);
    return p(x) * ff(x) / base->a2(z).real();
  };
  RealFn w = weight ? weight : RealFn([](double) { return 1.0; });
  out.rho = [base, p, w](double x) {
    cplx z(x);
    double a2 = base->a2(z).real();
    if (a2 == 0.0)
      throw std::runtime_error("to_sturm_liouville: singular coefficient");
    return p(x) * w(x) / a2;
  };
  return out;
}

LiouvilleNormalForm liouville_normal_form(const RealFn& p, const RealFn& q,
                                          const RealFn& rho, double a) {
  auto check_pos = [p, rho](double x) {
    if (!(p(x) > 0.0) || !(rho(x) > 0.0))
      throw std::domain_error(
          "liouville_normal_form: p and rho must be positive");
  };
  LiouvilleNormalForm out;
  out.t = [p, rho, a, check_pos](double x) {
    check_pos(x);
    return quad::integrate([&](double s) { return std::sqrt(rho(s) / p(s)); },
                           a, x);
  };
  out.amplitude = [p, rho, check_pos](double x) {
    check_pos(x);
    return std::pow(p(x) * rho(x), 0.25);
  };
  out.qhat = [p, q, rho, check_pos](double x) {
    check_pos(x);
    double h = 3e-3 * std::max(1.0, std::abs(x));
    auto mu = [&](double s) { return std::pow(p(s) * rho(s), -0.25); };
    auto inner = [&](double s) {
      return p(s) * quad::derivative(mu, s, 1, h);
    };
    double d_inner = quad::derivative(inner, x, 1, h);
    return (1.0 / rho(x)) * (-q(x) - d_inner / mu(x));
  };
  return out;
}

void SturmLiouvilleProblem::validate(int samples) const {
  for (int i = 1; i < samples; ++i) {
    double x = a + (b - a) * i / samples;
    if (!(p(x) > 0.0) || !(rho(x) > 0.0))
      throw std::domain_error(
          "SturmLiouvilleProblem: p and rho must be positive on (a,b)");
  }
}

namespace {

// RK4 for u' = v/p, v' = -(q + lambda rho) u from a to b, u(a)=0, v(a)=p(a).
// When store != nullptr the u samples land there (steps+1 values).
double shoot_mismatch(const SturmLiouvilleProblem& pr, double lambda,
                      int steps, std::vector<double>* store) {
  const double h = (pr.b - pr.a) / steps;
  double u = 0.0, v = pr.p(pr.a);
  if (store) {
    store->clear();
    store->reserve(steps + 1);
    store->push_back(u);
  }
  auto fu = [&](double x, double /*uu*/, double vv) { return vv / pr.p(x); };
  auto fv = [&](double x, double uu, double /*vv*/) {
    return -(pr.q(x) + lambda * pr.rho(x)) * uu;
  };
  for (int i = 0; i < steps; ++i) {
    double x = pr.a + i * h;
    double k1u = fu(x, u, v), k1v = fv(x, u, v);
    double k2u = fu(x + 0.5 * h, u + 0.5 * h * k1u, v + 0.5 * h * k1v);
    double k2v = fv(x + 0.5 * h, u + 0.5 * h * k1u, v + 0.5 * h * k1v);
    double k3u = fu(x + 0.5 * h, u + 0.5 * h * k2u, v + 0.5 * h * k2v);
    double k3v = fv(x + 0.5 * h, u + 0.5 * h * k2u, v + 0.5 * h * k2v);
    double k4u = fu(x + h, u + h * k3u, v + h * k3v);
    double k4v = fv(x + h, u + h * k3u, v + h * k3v);
    u += h / 6.0 * (k1u + 2 * k2u + 2 * k3u + k4u);
    v += h / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v);
    if (store) store->push_back(u);
  }
  if (!std::isfinite(u))
    throw std::runtime_error("sl_eigen_shoot: integrator failure (stiff)");
  return u;
}

// Mismatch with one Richardson halving of the fixed-step RK4 value.
double mismatch_richardson(const SturmLiouvilleProblem& pr, double lambda) {
  double coarse = shoot_mismatch(pr, lambda, 4096, nullptr);
  double fine = shoot_mismatch(pr, lambda, 8192, nullptr);
  return (16.0 * fine - coarse) / 15.0;
}

}  // namespace

EigenSolution sl_eigen_shoot(const SturmLiouvilleProblem& prob, int n,
                             double lambda_lo, double lambda_hi) {
  if (prob.bc != SturmLiouvilleProblem::BC::dirichlet)
    throw std::invalid_argument(
        "sl_eigen_shoot: only Dirichlet boundary conditions are supported");
  prob.validate();
  double flo = mismatch_richardson(prob, lambda_lo);
  double fhi = mismatch_richardson(prob, lambda_hi);
  if (flo * fhi > 0.0)
    throw std::runtime_error(
        "sl_eigen_shoot: bracket does not straddle a sign change");
  double lo = lambda_lo, hi = lambda_hi;
  for (int it = 0; it < 80; ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = mismatch_richardson(prob, mid);
    if (fm == 0.0) {
      lo = hi = mid;
      break;
    }
    if (flo * fm <= 0.0) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  EigenSolution out;
  out.lambda = 0.5 * (lo + hi);

  const int steps = 8192;
  std::vector<double> u;
  shoot_mismatch(prob, out.lambda, steps, &u);
  out.x.resize(steps + 1);
  const double h = (prob.b - prob.a) / steps;
  for (int i = 0; i <= steps; ++i) out.x[i] = prob.a + i * h;

  // Weighted norm by composite Simpson on the uniform samples.
  double s = 0.0;
  for (int i = 0; i <= steps; ++i) {
    double w = (i == 0 || i == steps) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    s += w * u[i] * u[i] * prob.rho(out.x[i]);
  }
  s *= h / 3.0;
  double scale = 1.0 / std::sqrt(s);
  out.phi.resize(steps + 1);
  for (int i = 0; i <= steps; ++i) out.phi[i] = scale * u[i];

  int zeros = 0;
  double thresh = 1e-8;  // ignore the clamped endpoints
  for (int i = 2; i < steps - 1; ++i)
    if (out.phi[i] * out.phi[i + 1] < 0.0 &&
        std::abs(out.phi[i]) > thresh)
      ++zeros;
  out.interior_zeros = zeros;
  if (zeros != n - 1)
    throw std::runtime_error(
        "sl_eigen_shoot: bracket captured an eigenfunction with " +
        std::to_string(zeros) + " interior zeros, expected " +
        std::to_string(n - 1));
  return out;
}

}  // namespace physkit::fuchsia
