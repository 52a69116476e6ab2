#include "physkit/contour.hpp"

#include <cmath>
#include <stdexcept>

#include "physkit/quadrature.hpp"

namespace physkit::contour {

Contour Contour::circle(cplx center, double radius) {
  Contour c;
  c.z = [=](double t) { return center + radius * std::exp(cplx(0.0, t)); };
  c.dz = [=](double t) { return radius * cplx(0.0, 1.0) * std::exp(cplx(0.0, t)); };
  c.t0 = -M_PI;
  c.t1 = M_PI;
  c.periodic = true;
  return c;
}

Contour Contour::segment(cplx a, cplx b) {
  Contour c;
  c.z = [=](double t) { return a + t * (b - a); };
  c.dz = [=](double) { return b - a; };
  c.t0 = 0.0;
  c.t1 = 1.0;
  c.periodic = false;
  return c;
}

void Contour::validate() const {
  const double h = 1e-6 * std::max(1.0, std::abs(t1 - t0));
  for (int i = 0; i < 16; ++i) {
    double t = t0 + (t1 - t0) * (i + 0.5) / 16.0;
    cplx fd = (z(t + h) - z(t - h)) / (2.0 * h);
    if (std::abs(fd - dz(t)) > 1e-8 * std::max(1.0, std::abs(dz(t))))
      throw std::runtime_error("Contour: dz/dt does not match the path");
  }
}

namespace {

cplx integrate_once(const CFn& f, const Contour& c, int n) {
  if (c.periodic) {
    const double h = (c.t1 - c.t0) / n;
    quad::Kahan re, im;
    for (int i = 0; i < n; ++i) {
      double t = c.t0 + i * h;
      cplx v = f(c.z(t)) * c.dz(t);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw std::runtime_error("contour_integrate: non-finite sample");
      re.add(v.real());
      im.add(v.imag());
    }
    return cplx(re.value(), im.value()) * h;
  }
  const auto& rule = quad::gauss_legendre(64);
  int panels = std::max(1, (n + 63) / 64);
  const double w = (c.t1 - c.t0) / panels;
  cplx total = 0.0;
  for (int p = 0; p < panels; ++p) {
    double mid = c.t0 + (p + 0.5) * w;
    cplx acc = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      double t = mid + 0.5 * w * rule.nodes[i];
      cplx v = f(c.z(t)) * c.dz(t);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw std::runtime_error("contour_integrate: non-finite sample");
      acc += rule.weights[i] * v;
    }
    total += acc * (0.5 * w);
  }
  return total;
}

}  // namespace

ContourResult contour_integrate(const CFn& f, const Contour& c, int n) {
  if (n < 2) throw std::invalid_argument("contour_integrate: n too small");
  cplx coarse = integrate_once(f, c, n);
  cplx fine = integrate_once(f, c, 2 * n);
  return {fine, std::abs(fine - coarse)};
}

cplx laurent_coefficient(const CFn& f, cplx z0, int k, double r, int n) {
  if (r <= 0.0) throw std::domain_error("laurent_coefficient: r > 0 required");
  Contour c = Contour::circle(z0, r);
  auto g = [&](cplx z) { return f(z) * std::pow(z - z0, -k - 1); };
  cplx val = contour_integrate(g, c, n).value;
  return val / (2.0 * M_PI * cplx(0.0, 1.0));
}

cplx residue_at(const CFn& f, cplx z0, double r, int n) {
  return laurent_coefficient(f, z0, -1, r, n);
}

cplx cauchy_derivative(const CFn& f, cplx z0, int order, double r, int n) {
  if (order < 0) throw std::invalid_argument("cauchy_derivative: order >= 0");
  double fact = 1.0;
  for (int j = 2; j <= order; ++j) fact *= j;
  return fact * laurent_coefficient(f, z0, order, r, n);
}

}  // namespace physkit::contour
