#include "physkit/distrib.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "physkit/quadrature.hpp"

namespace physkit::distrib {

namespace {

std::vector<double> poly_derivative(const std::vector<double>& p) {
  std::vector<double> d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * i);
  if (d.empty()) d.push_back(0.0);
  return d;
}

double poly_eval(const std::vector<double>& p, double x) {
  double s = 0.0;
  for (size_t i = p.size(); i-- > 0;) s = s * x + p[i];
  return s;
}

}  // namespace

double TestFunction::derivative(int order, double x) const {
  if (order == 0) return value(x);
  if (exact_derivative) return exact_derivative(order, x);
  if (order > 4)
    throw std::domain_error(
        "TestFunction: derivative orders above 4 need an exact derivative");
  return quad::derivative(value, x, order);
}

std::pair<double, double> TestFunction::integration_range() const {
  if (support) return *support;
  return {-window, window};
}

bool TestFunction::decays() const {
  return support.has_value() || cls == Cls::gaussian;
}

TestFunction TestFunction::bump(double sigma, double a) {
  if (sigma <= 0.0) throw std::domain_error("bump: sigma > 0");
  TestFunction t;
  t.cls = Cls::compact_bump;
  t.support = std::make_pair(a - sigma, a + sigma);
  t.value = [sigma, a](double x) {
    double u = (x - a) / sigma;
    if (std::abs(u) >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - u * u));
  };
  return t;
}

TestFunction TestFunction::poly_gaussian(std::vector<double> poly, double alpha,
                                         double window) {
  if (alpha <= 0.0) throw std::domain_error("poly_gaussian: alpha > 0");
  TestFunction t;
  t.cls = Cls::gaussian;
  t.window = window;
  auto p0 = std::make_shared<std::vector<double>>(std::move(poly));
  t.value = [p0, alpha](double x) {
    return poly_eval(*p0, x) * std::exp(-alpha * x * x);
  };
  // (P e^{-a x^2})' = (P' - 2 a x P) e^{-a x^2}: keep a polynomial ladder.
  t.exact_derivative = [p0, alpha](int order, double x) {
    std::vector<double> q = *p0;
    for (int k = 0; k < order; ++k) {
      std::vector<double> d = poly_derivative(q);
      std::vector<double> shifted(q.size() + 1, 0.0);
      for (size_t i = 0; i < q.size(); ++i) shifted[i + 1] = -2.0 * alpha * q[i];
      if (shifted.size() < d.size()) shifted.resize(d.size(), 0.0);
      for (size_t i = 0; i < d.size(); ++i) shifted[i] += d[i];
      q = std::move(shifted);
    }
    return poly_eval(q, x) * std::exp(-alpha * x * x);
  };
  return t;
}

TestFunction TestFunction::gaussian(double alpha, double window) {
  return poly_gaussian({1.0}, alpha, window);
}

TestFunction TestFunction::polynomial(std::vector<double> coeffs) {
  TestFunction t;
  t.cls = Cls::polynomial;
  auto p0 = std::make_shared<std::vector<double>>(std::move(coeffs));
  t.value = [p0](double x) { return poly_eval(*p0, x); };
  t.exact_derivative = [p0](int order, double x) {
    std::vector<double> q = *p0;
    for (int k = 0; k < order; ++k) q = poly_derivative(q);
    return poly_eval(q, x);
  };
  return t;
}

TestFunction TestFunction::smooth(RealFn f, double window) {
  TestFunction t;
  t.cls = Cls::generic_smooth;
  t.value = std::move(f);
  t.window = window;
  return t;
}

Distribution Distribution::delta(int order, double center) {
  if (order < 0) throw std::domain_error("delta: order >= 0");
  Distribution d;
  d.kind = Kind::delta;
  d.order = order;
  d.center = center;
  return d;
}
Distribution Distribution::heaviside_d() {
  Distribution d;
  d.kind = Kind::heaviside;
  return d;
}
Distribution Distribution::sign_d() {
  Distribution d;
  d.kind = Kind::sign;
  return d;
}
Distribution Distribution::abs_d() {
  Distribution d;
  d.kind = Kind::abs_x;
  return d;
}
Distribution Distribution::log_abs_d() {
  Distribution d;
  d.kind = Kind::log_abs;
  return d;
}
Distribution Distribution::pv_power(int n) {
  if (n < 1) throw std::domain_error("pv_power: n >= 1");
  Distribution d;
  d.kind = Kind::pv_inverse_power;
  d.order = n;
  return d;
}
Distribution Distribution::pole_d(int sign) {
  Distribution d;
  d.kind = Kind::pole;
  d.pole_sign = sign >= 0 ? +1 : -1;
  return d;
}
Distribution Distribution::regular_d(RealFn f) {
  Distribution d;
  d.kind = Kind::regular;
  d.regular_f = std::move(f);
  return d;
}

Distribution Distribution::times_poly(const std::vector<double>& poly) const {
  Distribution d = *this;
  auto p0 = std::make_shared<std::vector<double>>(poly);
  d.multiplier = [p0](int order, double x) {
    std::vector<double> q = *p0;
    for (int k = 0; k < order; ++k) q = poly_derivative(q);
    return poly_eval(q, x);
  };
  return d;
}

namespace {

// phi with an optional smooth multiplier folded in; derivatives by Leibniz.
double phi_with_multiplier(const Distribution& F, const TestFunction& phi,
                           int order, double x) {
  if (!F.multiplier) return phi.derivative(order, x);
  double s = 0.0;
  double binom = 1.0;
  for (int k = 0; k <= order; ++k) {
    s += binom * F.multiplier(k, x) * phi.derivative(order - k, x);
    binom = binom * (order - k) / (k + 1.0);
  }
  return s;
}

void require_decay(const TestFunction& phi, const char* what) {
  if (!phi.decays())
    throw std::domain_error(std::string(what) +
                            ": test function must decay (declared support or "
                            "Gaussian class)");
}

// One-sided reduction integral int_0^hi g(x) combo(x) dx with an estimate.
std::pair<double, double> one_sided(const std::function<double(double)>& f,
                                    double hi) {
  return quad::integrate_err(f, 0.0, hi, 1e-11);
}

}  // namespace

PairValue pair(const Distribution& F, const TestFunction& phi) {
  using K = Distribution::Kind;
  auto [lo, hi] = phi.integration_range();
  switch (F.kind) {
    case K::delta: {
      if (phi.support) {
        const double edge = 1e-12 * std::max(1.0, std::abs(F.center));
        if (std::abs(F.center - phi.support->first) < edge ||
            std::abs(F.center - phi.support->second) < edge)
          throw std::domain_error(
              "pair: delta centered on the edge of the declared support");
        if (F.center < phi.support->first || F.center > phi.support->second)
          return {cplx(0.0), 0.0};
      }
      double sign = (F.order % 2 == 0) ? 1.0 : -1.0;
      return {cplx(sign * phi_with_multiplier(F, phi, F.order, F.center)), 0.0};
    }
    case K::heaviside: {
      require_decay(phi, "pair(heaviside)");
      auto [v, e] = one_sided([&](double x) { return phi_with_multiplier(F, phi, 0, x); },
                              std::max(hi, 0.0));
      return {cplx(v), e};
    }
    case K::sign: {
      require_decay(phi, "pair(sign)");
      auto [v, e] = one_sided(
          [&](double x) {
            return phi_with_multiplier(F, phi, 0, x) -
                   phi_with_multiplier(F, phi, 0, -x);
          },
          std::max(std::abs(lo), hi));
      return {cplx(v), e};
    }
    case K::abs_x: {
      require_decay(phi, "pair(abs)");
      auto [v, e] = one_sided(
          [&](double x) {
            return x * (phi_with_multiplier(F, phi, 0, x) +
                        phi_with_multiplier(F, phi, 0, -x));
          },
          std::max(std::abs(lo), hi));
      return {cplx(v), e};
    }
    case K::log_abs: {
      require_decay(phi, "pair(log_abs)");
      double T = std::max(std::abs(lo), hi);
      auto even = [&](double x) {
        return phi_with_multiplier(F, phi, 0, x) +
               phi_with_multiplier(F, phi, 0, -x);
      };
      // Split off the log singularity: int_0^1 log x [g(x)-g(0)] dx is
      // regular, and int_0^1 log x dx = -1.
      double g0 = even(0.0);
      auto reg = [&](double x) {
        return std::log(x) * (even(x) - g0);
      };
      double c = std::min(1.0, T);
      auto [vr, e] = quad::integrate_err(reg, 0.0, c, 1e-11);
      double v = vr - g0 * c * (1.0 - std::log(c));
      if (T > 1.0)
        v += quad::integrate([&](double x) { return std::log(x) * even(x); },
                             1.0, T, 1e-11);
      return {cplx(v), e};
    }
    case K::pv_inverse_power: {
      require_decay(phi, "pair(pv)");
      int n = F.order;
      double T = std::max(std::abs(lo), hi);
      double fact = 1.0;
      for (int j = 2; j <= n - 1; ++j) fact *= j;
      auto g = [&](double x) {
        return (phi_with_multiplier(F, phi, n - 1, x) -
                phi_with_multiplier(F, phi, n - 1, -x)) /
               x;
      };
      auto [v, e] = one_sided(g, T);
      return {cplx(v / fact), e / fact};
    }
    case K::pole: {
      require_decay(phi, "pair(pole)");
      PairValue pv = pair(Distribution::pv_power(1), phi);
      double phi0 = phi_with_multiplier(F, phi, 0, 0.0);
      cplx val = pv.value + cplx(0.0, -F.pole_sign * M_PI * phi0);
      return {val, pv.err_estimate};
    }
    case K::regular: {
      require_decay(phi, "pair(regular)");
      auto [v, e] = quad::integrate_err(
          [&](double x) {
            return F.regular_f(x) * phi_with_multiplier(F, phi, 0, x);
          },
          lo, hi, 1e-11);
      return {cplx(v), e};
    }
  }
  throw std::logic_error("pair: unknown distribution kind");
}

PairValue pair(const DistributionSum& F, const TestFunction& phi) {
  cplx total = 0.0;
  double err = 0.0;
  for (const auto& [w, d] : F) {
    PairValue p = pair(d, phi);
    total += w * p.value;
    err += std::abs(w) * p.err_estimate;
  }
  return {total, err};
}

DeltaSeqKind delta_seq_kind_from_string(const std::string& s) {
  if (s == "box") return DeltaSeqKind::box;
  if (s == "gaussian") return DeltaSeqKind::gaussian;
  if (s == "lorentzian") return DeltaSeqKind::lorentzian;
  if (s == "dirichlet") return DeltaSeqKind::dirichlet;
  throw std::invalid_argument("unknown delta-sequence kind '" + s + "'");
}

double delta_sequence_eval(DeltaSeqKind kind, int n, double x) {
  if (n < 1) throw std::domain_error("delta_sequence_eval: n >= 1");
  switch (kind) {
    case DeltaSeqKind::box:
      return (x > -0.5 / n && x < 0.5 / n) ? static_cast<double>(n) : 0.0;
    case DeltaSeqKind::gaussian:
      return n / std::sqrt(M_PI) * std::exp(-double(n) * n * x * x);
    case DeltaSeqKind::lorentzian:
      return n / (M_PI * (1.0 + double(n) * n * x * x));
    case DeltaSeqKind::dirichlet:
      if (x == 0.0) return n / M_PI;
      return std::sin(n * x) / (M_PI * x);
  }
  throw std::logic_error("delta_sequence_eval: unknown kind");
}

std::vector<SeqPairRow> pair_seq(DeltaSeqKind kind, const TestFunction& phi,
                                 const std::vector<int>& ns) {
  std::vector<SeqPairRow> rows;
  auto [lo, hi] = phi.integration_range();
  double phi0 = phi(0.0);
  for (int n : ns) {
    double v;
    if (kind == DeltaSeqKind::box) {
      double a = std::max(lo, -0.5 / n), b = std::min(hi, 0.5 / n);
      v = n * quad::integrate([&](double x) { return phi(x); }, a, b, 1e-13);
    } else if (kind == DeltaSeqKind::dirichlet) {
      // globally oscillatory: refine over the whole window
      v = quad::integrate(
          [&](double x) { return delta_sequence_eval(kind, n, x) * phi(x); },
          lo, hi, 1e-12, 18);
    } else {
      // peaked at 0 with width ~1/n: geometric rings resolve the peak
      double T = std::max(std::abs(lo), hi);
      std::vector<double> cuts{0.0};
      for (double r = 1.0 / n; r < T; r *= 4.0) cuts.push_back(r);
      cuts.push_back(T);
      double acc = 0.0;
      for (size_t i = 0; i + 1 < cuts.size(); ++i)
        acc += quad::integrate(
            [&](double x) {
              return delta_sequence_eval(kind, n, x) * phi(x) +
                     delta_sequence_eval(kind, n, -x) * phi(-x);
            },
            cuts[i], cuts[i + 1], 1e-13);
      v = acc;
    }
    rows.push_back({n, v, std::abs(v - phi0)});
  }
  return rows;
}

DistributionSum compose_delta(const RealFn& df,
                              const std::vector<double>& roots) {
  DistributionSum out;
  for (double r : roots) {
    double slope = std::abs(df(r));
    if (slope < 1e-10)
      throw std::domain_error(
          "compose_delta: degenerate root (|f'| < 1e-10) at x = " +
          std::to_string(r));
    out.emplace_back(1.0 / slope, Distribution::delta(0, r));
  }
  return out;
}

DistributionSum distribution_derivative(const Distribution& F) {
  using K = Distribution::Kind;
  if (F.multiplier)
    throw std::domain_error(
        "distribution_derivative: derivative of a multiplied distribution is "
        "not in the catalog");
  switch (F.kind) {
    case K::heaviside:
      return {{1.0, Distribution::delta(0, 0.0)}};
    case K::sign:
      return {{2.0, Distribution::delta(0, 0.0)}};
    case K::abs_x:
      return {{1.0, Distribution::sign_d()}};
    case K::log_abs:
      return {{1.0, Distribution::pv_power(1)}};
    case K::delta:
      return {{1.0, Distribution::delta(F.order + 1, F.center)}};
    default:
      throw std::domain_error(
          "distribution_derivative: unsupported kind in the catalog");
  }
}

SokhotskyResult sokhotsky_limit(int sign, const TestFunction& phi,
                                const std::vector<double>& eps_list) {
  if (!(phi.cls == TestFunction::Cls::gaussian ||
        phi.cls == TestFunction::Cls::compact_bump))
    throw std::domain_error(
        "sokhotsky_limit: test function must be Gaussian class or compact");
  std::vector<double> eps = eps_list;
  if (eps.empty())
    for (int k = 4; k <= 12; ++k) eps.push_back(std::ldexp(1.0, -k));

  auto [lo, hi] = phi.integration_range();
  double T = std::max(std::abs(lo), hi);
  int s = sign >= 0 ? +1 : -1;

  SokhotskyResult out;
  for (double e : eps) {
    // Geometric rings resolve the eps-wide Lorentzian peak.
    std::vector<double> cuts{0.0};
    for (double r = e; r < T; r *= 4.0) cuts.push_back(r);
    cuts.push_back(T);
    cplx acc = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
      // fold x and -x together
      acc += quad::integrate_c(
          [&](double x) {
            return phi(x) / cplx(x, s * e) + phi(-x) / cplx(-x, s * e);
          },
          cuts[i], cuts[i + 1], 1e-12);
    }
    out.sweep.emplace_back(e, acc);
  }
  size_t m = out.sweep.size();
  cplx f2 = out.sweep[m - 1].second;
  if (m >= 2) {
    double e1 = out.sweep[m - 2].first, e2 = out.sweep[m - 1].first;
    cplx f1 = out.sweep[m - 2].second;
    out.limit = f2 + (f2 - f1) * (e2 / (e1 - e2));
  } else {
    out.limit = f2;
  }
  PairValue pv = pair(Distribution::pv_power(1), phi);
  out.reference = pv.value + cplx(0.0, -s * M_PI * phi(0.0));
  out.gap = std::abs(f2 - out.reference);
  return out;
}

std::vector<double> delta_moment_expansion(const RealFn& f, int kmax,
                                           double window) {
  std::vector<double> out(kmax + 1);
  double sign = 1.0, fact = 1.0;
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) {
      sign = -sign;
      fact *= k;
    }
    out[k] = sign / fact *
             quad::integrate(
                 [&](double y) { return f(y) * std::pow(y, k); }, -window,
                 window, 1e-12);
  }
  return out;
}

}  // namespace physkit::distrib
