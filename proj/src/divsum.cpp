#include "physkit/divsum.hpp"

#include <cmath>
#include <stdexcept>

#include "physkit/quadrature.hpp"

namespace physkit::divsum {

double partial_sum(const SeriesSpec& spec, int n) {
  if (n < 0) throw std::domain_error("partial_sum: n >= 0 required");
  quad::Kahan acc;
  double xp = 1.0;
  for (int j = 0; j <= n; ++j) {
    double term = spec.coeff(j);
    if (spec.kind == SeriesSpec::Kind::power_series_at_x) {
      term *= xp;
      xp *= spec.x;
    }
    acc.add(term);
  }
  return acc.value();
}

AbelResult abel_sum(const CoeffFn& coeff, const std::vector<double>& eps_list) {
  std::vector<double> eps = eps_list;
  if (eps.empty())
    for (int k = 4; k <= 16; ++k) eps.push_back(std::ldexp(1.0, -k));

  AbelResult out;
  for (double e : eps) {
    const double r = 1.0 - e;
    quad::Kahan acc;
    double rp = 1.0;
    double tail_small = 0;
    for (long j = 0;; ++j) {
      double term = coeff(static_cast<int>(j)) * rp;
      acc.add(term);
      rp *= r;
      double mag = std::abs(term);
      if (mag <= 1e-18 * std::max(1.0, std::abs(acc.value()))) {
        if (++tail_small >= 4) break;
      } else {
        tail_small = 0;
      }
      if (std::abs(acc.value()) > 1e120 || !std::isfinite(acc.value()))
        throw std::runtime_error(
            "abel_sum: boundary values diverge (series not Abel-summable)");
      if (j > 100000000L)
        throw std::runtime_error("abel_sum: radial sum did not settle");
    }
    out.radii.push_back(e);
    out.boundary.push_back(acc.value());
  }

  // Divergence along the sequence: persistent geometric growth.
  size_t m = out.boundary.size();
  if (m >= 4) {
    double g1 = std::abs(out.boundary[m - 1]) / std::max(1.0, std::abs(out.boundary[m - 2]));
    double g2 = std::abs(out.boundary[m - 2]) / std::max(1.0, std::abs(out.boundary[m - 3]));
    if (g1 > 10.0 && g2 > 10.0)
      throw std::runtime_error(
          "abel_sum: boundary values grow without bound along the radii");
  }

  if (m == 1) {
    out.value = out.boundary[0];
    out.spread = 0.0;
    return out;
  }
  double e1 = out.radii[m - 2], f1 = out.boundary[m - 2];
  double e2 = out.radii[m - 1], f2 = out.boundary[m - 1];
  out.value = f2 + (f2 - f1) * e2 / (e1 - e2);
  out.spread = std::abs(out.value - f2);
  return out;
}

double borel_transform(const CoeffFn& coeff, int nterms, double t) {
  // Partial sums s_0..s_N of sum a_j t^j / j!.
  std::vector<double> s;
  s.reserve(nterms + 1);
  quad::Kahan acc;
  double pow_fact = 1.0;  // t^j / j!
  int converged_at = -1;
  double prev_mag = HUGE_VAL;
  for (int j = 0; j <= nterms; ++j) {
    double term = coeff(j) * pow_fact;
    if (!std::isfinite(term))
      throw std::runtime_error("borel_sum: term overflow at a quadrature node");
    acc.add(term);
    s.push_back(acc.value());
    double mag = std::abs(term);
    if (converged_at < 0 && j >= 2 &&
        mag <= 1e-16 * std::max(1.0, std::abs(acc.value())) &&
        prev_mag <= 1e-16 * std::max(1.0, std::abs(acc.value())))
      converged_at = j;
    prev_mag = mag;
    pow_fact *= t / (j + 1);
  }
  if (converged_at >= 0) return s[converged_at];

  // Iterated Aitken on the partial sums. The front of the sequence carries
  // the smallest magnitudes, so settled values are read off from the front;
  // one level is exact for the geometric-type transforms in scope.
  int m = std::min<int>(s.size(), 24);
  std::vector<double> w(s.begin(), s.begin() + m);
  while (w.size() >= 3) {
    std::vector<double> nx;
    for (size_t i = 0; i + 2 < w.size(); ++i) {
      double d2 = w[i + 2] - 2.0 * w[i + 1] + w[i];
      double d1 = w[i + 2] - w[i + 1];
      if (std::abs(d2) < 1e-300) {
        nx.push_back(w[i + 2]);
        continue;
      }
      nx.push_back(w[i + 2] - d1 * d1 / d2);
    }
    for (size_t i = 0; i + 1 < nx.size(); ++i)
      if (std::abs(nx[i + 1] - nx[i]) <= 1e-10 * std::max(1.0, std::abs(nx[i])))
        return nx[i];
    if (nx.size() < 3) return nx.back();
    w = std::move(nx);
  }
  return w.back();
}

BorelResult borel_sum(const CoeffFn& coeff, int nterms, int quad_order) {
  auto value_with = [&](int order) {
    return quad::laguerre_integrate(
        [&](double t) { return borel_transform(coeff, nterms, t); }, order);
  };
  double v = value_with(quad_order);
  double v2 = value_with(quad_order + quad_order / 2);
  return {v, std::abs(v2 - v)};
}

double stieltjes_euler(double x) {
  if (!(x > 0.0)) throw std::domain_error("stieltjes_euler: requires x > 0");
  // e^{-xi/x} is below 1e-20 past T = 46 x; integrand smooth on [0, T].
  double T = 46.0 * x;
  return quad::integrate(
      [&](double xi) { return std::exp(-xi / x) / (1.0 + xi); }, 0.0, T,
      1e-12);
}

TruncationReport euler_truncation_error(double x, int k) {
  if (x < 0.0) throw std::domain_error("euler_truncation_error: x >= 0");
  if (k < 0) throw std::domain_error("euler_truncation_error: k >= 0");
  TruncationReport rep;
  if (x == 0.0) {
    rep.gap = 0.0;
    rep.bound = 0.0;
    rep.within_bound = true;
    return rep;
  }
  // s_k carries the terms j = 0..k-1 ("truncated after the k-th term").
  SeriesSpec s;
  s.kind = SeriesSpec::Kind::numeric_series;
  s.coeff = [x](int j) {
    double t = std::pow(x, j + 1);
    for (int i = 2; i <= j; ++i) t *= i;
    return (j % 2 == 0 ? 1.0 : -1.0) * t;
  };
  double sk = (k == 0) ? 0.0 : partial_sum(s, k - 1);
  rep.gap = std::abs(stieltjes_euler(x) - sk);
  double logb = (k + 1) * std::log(x);
  for (int i = 2; i <= k; ++i) logb += std::log(double(i));
  rep.bound = std::exp(logb);
  rep.within_bound = rep.gap <= rep.bound;
  return rep;
}

}  // namespace physkit::divsum
