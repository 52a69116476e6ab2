#include "physkit/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace physkit::quad {

namespace {

Rule make_gauss_legendre(int n) {
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev-based initial guess, then Newton on P_n.
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    r.nodes[i] = -z;
    r.nodes[n - 1 - i] = z;
    r.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    r.weights[n - 1 - i] = r.weights[i];
  }
  return r;
}

Rule make_gauss_laguerre(int n) {
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  double z = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i == 0) {
      z = 3.0 / (1.0 + 2.4 * n);
    } else if (i == 1) {
      z += 15.0 / (1.0 + 2.5 * n);
    } else {
      double ai = i - 1;
      z += ((1.0 + 2.55 * ai) / (1.9 * ai)) * (z - r.nodes[i - 2]);
    }
    double pp = 0.0, p2 = 0.0;
    for (int it = 0; it < 200; ++it) {
      double p1 = 1.0;
      p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0 - z) * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (p1 - p2) / z;
      double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-15 * z) break;
    }
    r.nodes[i] = z;
    r.weights[i] = -1.0 / (pp * n * p2);
  }
  return r;
}

template <typename T>
T panels_value(const std::function<T(double)>& f, double a, double b,
               int panels, const Rule& rule) {
  const double w = (b - a) / panels;
  T total{};
  for (int p = 0; p < panels; ++p) {
    double lo = a + p * w;
    double mid = lo + 0.5 * w;
    T acc{};
    for (size_t i = 0; i < rule.nodes.size(); ++i)
      acc += rule.weights[i] * f(mid + 0.5 * w * rule.nodes[i]);
    total += acc * (0.5 * w);
  }
  return total;
}

template <typename T>
std::pair<T, double> integrate_impl(const std::function<T(double)>& f, double a,
                                    double b, double tol, int max_doublings) {
  if (a == b) return {T{}, 0.0};
  const Rule& rule = gauss_legendre(64);
  T prev = panels_value(f, a, b, 1, rule);
  double delta = std::abs(prev);
  int panels = 1;
  for (int k = 0; k < max_doublings; ++k) {
    panels *= 2;
    T cur = panels_value(f, a, b, panels, rule);
    delta = std::abs(cur - prev);
    prev = cur;
    if (delta <= tol * std::max(1.0, std::abs(cur))) return {cur, delta};
  }
  return {prev, delta};
}

}  // namespace

const Rule& gauss_legendre(int n) {
  static std::map<int, Rule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_gauss_legendre(n)).first;
  return it->second;
}

const Rule& gauss_laguerre(int n) {
  static std::map<int, Rule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_gauss_laguerre(n)).first;
  return it->second;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol, int max_doublings) {
  return integrate_impl(f, a, b, tol, max_doublings).first;
}

std::complex<double> integrate_c(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double tol, int max_doublings) {
  return integrate_impl(f, a, b, tol, max_doublings).first;
}

std::pair<double, double> integrate_err(const std::function<double(double)>& f,
                                        double a, double b, double tol,
                                        int max_doublings) {
  return integrate_impl(f, a, b, tol, max_doublings);
}

double integrate_periodic(const std::function<double(double)>& f, double a,
                          double b, int n) {
  if (n < 1) throw std::invalid_argument("integrate_periodic: n must be >= 1");
  const double h = (b - a) / n;
  Kahan acc;
  for (int i = 0; i < n; ++i) acc.add(f(a + i * h));
  return acc.value() * h;
}

double laguerre_integrate(const std::function<double(double)>& g, int n) {
  const Rule& r = gauss_laguerre(n);
  Kahan acc;
  for (int i = 0; i < n; ++i) acc.add(r.weights[i] * g(r.nodes[i]));
  return acc.value();
}

double derivative(const std::function<double(double)>& f, double x, int order,
                  double h) {
  if (order == 0) return f(x);
  if (order < 0 || order > 4)
    throw std::invalid_argument("derivative: stencil orders are 0..4");
  if (h == 0.0) h = 1e-3 * std::max(1.0, std::abs(x));
  auto F = [&](int k) { return f(x + k * h); };
  switch (order) {
    case 1:
      return (-F(2) + 8 * F(1) - 8 * F(-1) + F(-2)) / (12 * h);
    case 2:
      return (-F(2) + 16 * F(1) - 30 * F(0) + 16 * F(-1) - F(-2)) /
             (12 * h * h);
    case 3:
      return (-F(3) + 8 * F(2) - 13 * F(1) + 13 * F(-1) - 8 * F(-2) + F(-3)) /
             (8 * h * h * h);
    default:
      return (-F(3) + 12 * F(2) - 39 * F(1) + 56 * F(0) - 39 * F(-1) +
              12 * F(-2) - F(-3)) /
             (6 * h * h * h * h);
  }
}

}  // namespace physkit::quad
