#include "physkit/demos.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <stdexcept>

#include "physkit/contour.hpp"
#include "physkit/distrib.hpp"
#include "physkit/divsum.hpp"
#include "physkit/finhilb.hpp"
#include "physkit/fuchsia.hpp"
#include "physkit/greens.hpp"
#include "physkit/harmonic.hpp"
#include "physkit/specfun.hpp"

namespace physkit::demos {

namespace {

using cplx = std::complex<double>;

double opt_double(const Options& o, const std::string& key, double dflt) {
  auto it = o.find(key);
  return it == o.end() ? dflt : std::stod(it->second);
}

int opt_int(const Options& o, const std::string& key, int dflt) {
  auto it = o.find(key);
  return it == o.end() ? dflt : std::stoi(it->second);
}

std::string opt_str(const Options& o, const std::string& key,
                    const std::string& dflt) {
  auto it = o.find(key);
  return it == o.end() ? dflt : it->second;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// ---- individual demos -------------------------------------------------

std::vector<DemoRecord> demo_sl_eigen(const Options&, std::string*) {
  using namespace physkit::fuchsia;
  SturmLiouvilleProblem pr;
  pr.p = [](double x) { return x * x * x; };
  pr.q = [](double x) { return x; };
  pr.rho = [](double x) { return x; };
  pr.a = 1.0;
  pr.b = 2.0;
  std::vector<DemoRecord> recs;
  const double log2 = std::log(2.0);
  for (int n = 1; n <= 4; ++n) {
    double exact = std::pow(n * M_PI / log2, 2);
    EigenSolution sol = sl_eigen_shoot(pr, n, exact - 15.0, exact + 15.0);
    recs.push_back(make_record("sl-eigen.lambda" + std::to_string(n),
                               "eigenvalues (n pi / log 2)^2", sol.lambda,
                               exact, 1e-7, true));
    auto ref_at = [&](double x) {
      return std::sqrt(2.0 / log2) / x * std::sin(n * M_PI * std::log(x) / log2);
    };
    double overlap = 0.0;
    for (size_t i = 0; i < sol.x.size(); ++i) overlap += sol.phi[i] * ref_at(sol.x[i]);
    double sign = overlap >= 0 ? 1.0 : -1.0;
    double maxerr = 0.0;
    for (size_t i = 0; i < sol.x.size(); ++i)
      maxerr = std::max(maxerr, std::abs(sign * sol.phi[i] - ref_at(sol.x[i])));
    recs.push_back(make_record("sl-eigen.phi" + std::to_string(n),
                               "closed-form eigenfunction", maxerr, 0.0, 1e-5));
  }
  return recs;
}

std::vector<DemoRecord> demo_frobenius(const Options&, std::string* emitted) {
  using namespace physkit::fuchsia;
  std::vector<DemoRecord> recs;

  // z w'' + (1-z) w' = 0 at 0 and infinity.
  LinearODE2 kummer;
  kummer.a2 = [](cplx z) { return z; };
  kummer.a1 = [](cplx z) { return 1.0 - z; };
  kummer.a0 = [](cplx) { return cplx(0.0); };
  PointClass pc = classify_point(kummer, 0.0);
  recs.push_back(make_record("frobenius.kummer.alpha0", "regular singular at 0",
                             pc.alpha0.real(), 1.0, 1e-9));
  recs.push_back(make_record(
      "frobenius.kummer.inf",
      "irregular at infinity (value 1 = irregular)",
      classify_point_at_infinity(kummer).kind == PointKind::irregular_singular
          ? 1.0
          : 0.0,
      1.0, 0.5));

  // Printed intermediates of the 2z(z+2) example at z = -2: alpha0 = -1/4
  // feeds the indicial equation and lands on sigma = {5/4, 0}; the printed
  // pair is consistent with the quadratic-root formula.
  auto [s1, s2] = characteristic_exponents(-0.25, 0.0);
  recs.push_back(make_record("frobenius.2z(z+2).sigma1",
                             "sigma from printed alpha0 = -1/4", s1.real(),
                             1.25, 1e-12));
  recs.push_back(make_record("frobenius.2z(z+2).sigma2", "second exponent",
                             s2.real(), 0.0, 1e-12));

  // t^2 u'' - (t+t^2) u' + u = 0, sigma = 1: w_n = 1/n!.
  LinearODE2 worked;
  worked.a2 = [](cplx t) { return t * t; };
  worked.a1 = [](cplx t) { return -(t + t * t); };
  worked.a0 = [](cplx) { return cplx(1.0); };
  PowerSeriesSolution ps = frobenius_solve(worked, 0.0, 1.0, 8);
  double werr = 0.0;
  double fact = 1.0;
  for (int nn = 0; nn <= 8; ++nn) {
    if (nn > 0) fact *= nn;
    werr = std::max(werr, std::abs(ps.coeffs[nn] - 1.0 / fact));
  }
  recs.push_back(make_record("frobenius.series.w", "w_n = 1/n! (te^t)", werr,
                             0.0, 1e-10));
  if (emitted)
    *emitted +=
        "note: the ad-4 example's printed alpha0 = -1/4 at z = -2 is "
        "consistent with sigma = {0, 5/4} under the indicial equation\n";
  return recs;
}

std::vector<DemoRecord> demo_green_first_order(const Options&, std::string*) {
  using namespace physkit::greens;
  GreensKernel k = catalog_kernel("first-order-exp");
  std::vector<double> grid;
  for (int i = 0; i < 64; ++i) grid.push_back(3.0 * i / 63.0);
  auto y = solve_via_green(
      k, [](double t) { return t; }, 0.0, HUGE_VAL, grid);
  double maxerr = 0.0;
  for (size_t i = 0; i < grid.size(); ++i) {
    double t = grid[i];
    maxerr = std::max(maxerr, std::abs(y[i] - (std::exp(t) - 1.0 - t)));
  }
  return {make_record("green-first-order", "y' - y = t gives e^t - 1 - t",
                      maxerr, 0.0, 1e-6)};
}

std::vector<DemoRecord> demo_green_harmonic(const Options&, std::string*) {
  using namespace physkit::greens;
  GreensKernel k = catalog_kernel("harmonic-ic");
  std::vector<double> grid;
  for (int i = 0; i < 64; ++i) grid.push_back(2.0 * M_PI * i / 63.0);
  auto y = solve_via_green(
      k, [](double t) { return std::cos(t); }, 0.0, HUGE_VAL, grid);
  double maxerr = 0.0;
  for (size_t i = 0; i < grid.size(); ++i) {
    double t = grid[i];
    maxerr = std::max(maxerr, std::abs(y[i] - 0.5 * t * std::sin(t)));
  }
  return {make_record("green-harmonic", "y'' + y = cos t gives t sin t / 2",
                      maxerr, 0.0, 1e-6)};
}

std::vector<DemoRecord> demo_beam(const Options& opts, std::string* emitted) {
  using namespace physkit::greens;
  double c = opt_double(opts, "c", 1.0);
  double L = opt_double(opts, "L", 1.0);
  int points = opt_int(opts, "points", 9);
  if (emitted) {
    *emitted += "x,deflection\n";
    for (int i = 0; i < points; ++i) {
      double x = L * i / (points - 1.0);
      *emitted += fmt(x) + "," + fmt(beam_deflection(c, L, x, 51)) + "\n";
    }
  }
  std::vector<DemoRecord> recs;
  recs.push_back(make_record("beam.bc", "clamped end y(0) = 0",
                             beam_deflection(c, L, 0.0, 51), 0.0, 1e-14));
  double tail = 0.0;
  for (int j = 3; j <= 501; j += 2) tail += std::pow(double(j), -5.0);
  tail *= 4.0 * c * std::pow(L, 4) / std::pow(M_PI, 5);
  double d1 = beam_deflection(c, L, 0.5 * L, 1);
  double d51 = beam_deflection(c, L, 0.5 * L, 51);
  recs.push_back(make_record("beam.tail", "odd-j tail bound at midspan",
                             std::abs(d51 - d1) <= tail ? 1.0 : 0.0, 1.0,
                             0.5));
  // route equivalence against the spectral kernel solution
  std::vector<std::pair<double, std::function<double(double)>>> pairs;
  for (int j = 1; j <= 200; ++j) {
    double lam = std::pow(M_PI * j / L, 4);
    pairs.emplace_back(lam, [j, L](double x) {
      return std::sqrt(2.0 / L) * std::sin(M_PI * j * x / L);
    });
  }
  GreensKernel spec = make_spectral(pairs);
  std::vector<double> grid = {0.25 * L, 0.5 * L, 0.75 * L};
  auto y = solve_via_green(spec, [c](double) { return c; }, 0.0, L, grid);
  double gap = 0.0;
  for (size_t i = 0; i < grid.size(); ++i)
    gap = std::max(gap, std::abs(y[i] - beam_deflection(c, L, grid[i], 200)));
  recs.push_back(
      make_record("beam.route", "spectral kernel route", gap, 0.0, 1e-6));
  return recs;
}

std::vector<DemoRecord> demo_euler_series(const Options& opts,
                                          std::string* emitted) {
  using namespace physkit::divsum;
  double x = opt_double(opts, "x", 0.1);
  int kmax = opt_int(opts, "kmax", 20);
  if (emitted) *emitted += "k,partial,gap,bound\n";
  bool all_ok = true;
  for (int k = 0; k <= kmax; ++k) {
    TruncationReport rep = euler_truncation_error(x, k);
    if (emitted) {
      SeriesSpec euler;
      euler.coeff = [x](int j) {
        double t = std::pow(x, j + 1);
        for (int i = 2; i <= j; ++i) t *= i;
        return (j % 2 == 0 ? 1.0 : -1.0) * t;
      };
      double partial = (k == 0) ? 0.0 : partial_sum(euler, k - 1);
      *emitted += std::to_string(k) + "," + fmt(partial) + "," +
                  fmt(rep.gap) + "," + fmt(rep.bound) + "\n";
    }
    all_ok = all_ok && rep.within_bound;
  }
  return {make_record("euler-series.bound",
                      "gap below first neglected term for all k",
                      all_ok ? 1.0 : 0.0, 1.0, 0.5)};
}

std::vector<DemoRecord> demo_sokhotsky(const Options&, std::string*) {
  using namespace physkit::distrib;
  TestFunction phi = TestFunction::gaussian(1.0, 8.0);
  std::vector<DemoRecord> recs;
  for (int s : {+1, -1}) {
    SokhotskyResult r = sokhotsky_limit(s, phi);
    recs.push_back(make_record(
        std::string("sokhotsky.") + (s > 0 ? "plus" : "minus"),
        "gap to pv -+ i pi delta at eps = 2^-12", r.gap, 0.0, 1e-3));
  }
  return recs;
}

std::vector<DemoRecord> demo_delta_seq(const Options& opts,
                                       std::string* emitted) {
  using namespace physkit::distrib;
  std::string kind_s = opt_str(opts, "kind", "gaussian");
  DeltaSeqKind kind = delta_seq_kind_from_string(kind_s);
  int nmax = opt_int(opts, "nmax",
                     kind == DeltaSeqKind::dirichlet ? 64 : 4096);
  std::vector<int> ns;
  for (int n = 4; n <= nmax; n *= 4) ns.push_back(n);
  if (ns.empty() || ns.back() != nmax) ns.push_back(nmax);
  TestFunction phi = TestFunction::gaussian(1.0, 8.0);
  auto rows = pair_seq(kind, phi, ns);
  if (emitted) {
    *emitted += "n,value,gap\n";
    for (const auto& r : rows)
      *emitted +=
          std::to_string(r.n) + "," + fmt(r.value) + "," + fmt(r.gap) + "\n";
  }
  return {make_record("delta-seq." + kind_s, "pairing tends to phi(0)",
                      rows.back().gap, 0.0, 1e-3)};
}

std::vector<DemoRecord> demo_residues(const Options&, std::string*) {
  using namespace physkit::contour;
  std::vector<DemoRecord> recs;
  auto f1 = [](cplx z) { return (3.0 * z + 2.0) / (z * std::pow(z + 1.0, 3)); };
  cplx v1 = contour_integrate(f1, Contour::circle(0.0, 3.0), 512).value;
  recs.push_back(make_record("residues.sum0", "closed contour |z|=3",
                             std::abs(v1), 0.0, 1e-8));
  auto f2 = [](cplx z) { return std::exp(2.0 * z) / std::pow(z + 1.0, 4); };
  cplx v2 = contour_integrate(f2, Contour::circle(0.0, 3.0), 512).value;
  cplx e2 = cplx(0.0, 8.0 * M_PI * std::exp(-2.0) / 3.0);
  recs.push_back(make_record("residues.e2z", "8 pi i e^-2 / 3",
                             std::abs(v2 - e2), 0.0,
                             1e-8 * std::abs(e2)));
  auto f3 = [](cplx z) { return std::exp(1.0 / z); };
  cplx v3 = contour_integrate(f3, Contour::circle(0.0, 1.0), 1024).value;
  recs.push_back(make_record("residues.essential", "2 pi i",
                             std::abs(v3 - cplx(0.0, 2.0 * M_PI)), 0.0,
                             1e-8 * 2.0 * M_PI));
  const double T = 100.0;
  auto f4 = [](cplx z) { return 1.0 / (z * z + 1.0); };
  cplx v4 = contour_integrate(f4, Contour::segment(-T, T), 2048).value;
  double tail4 = 2.0 / T;  // int_T^inf dx/x^2 both sides
  recs.push_back(make_record("residues.arctan", "pi with tail correction",
                             v4.real() + tail4, M_PI, 1e-4));
  struct PA {
    double p, a;
  };
  for (PA pa : {PA{1.0, 2.0}, PA{-1.0, 0.5}}) {
    auto f5 = [pa](cplx z) {
      return std::exp(cplx(0.0, pa.p) * z) / (z * z + pa.a * pa.a);
    };
    cplx v5 = contour_integrate(f5, Contour::segment(-T, T), 8192).value;
    double expect = M_PI / std::abs(pa.a) * std::exp(-std::abs(pa.p * pa.a));
    // leading oscillatory tail: -2 sin(pT) / (p (T^2 + a^2))
    double tail5 = -2.0 * std::sin(pa.p * T) / (pa.p * (T * T + pa.a * pa.a));
    recs.push_back(make_record("residues.fourier(p=" + fmt(pa.p) + ")",
                               "(pi/|a|) e^{-|pa|} with tail estimate",
                               v5.real() + tail5, expect, 1e-4));
  }
  return recs;
}

std::vector<DemoRecord> demo_eigensystem(const Options&, std::string*) {
  using namespace physkit::finhilb;
  std::vector<DemoRecord> recs;
  ComplexMatrix a(3, 3);
  a(0, 0) = 1;
  a(0, 2) = 1;
  a(1, 1) = 1;
  a(2, 0) = 1;
  a(2, 2) = 1;
  EigenSystem es = hermitian_eigen(a);
  double lam_err = std::abs(es.eigenvalues[0] - 0.0) +
                   std::abs(es.eigenvalues[1] - 1.0) +
                   std::abs(es.eigenvalues[2] - 2.0);
  recs.push_back(
      make_record("eigensystem.values", "{0, 1, 2}", lam_err, 0.0, 1e-10));
  ComplexMatrix e0(3, 3), e2(3, 3);
  e0(0, 0) = 0.5;
  e0(0, 2) = -0.5;
  e0(2, 0) = -0.5;
  e0(2, 2) = 0.5;
  e2(0, 0) = 0.5;
  e2(0, 2) = 0.5;
  e2(2, 0) = 0.5;
  e2(2, 2) = 0.5;
  recs.push_back(make_record("eigensystem.E0", "printed projector",
                             (es.projectors[0] - e0).max_abs(), 0.0, 1e-10));
  recs.push_back(make_record("eigensystem.E2", "printed projector",
                             (es.projectors[2] - e2).max_abs(), 0.0, 1e-10));
  ComplexMatrix p0 = spectral_projector_poly(a, {0.0, 1.0, 2.0}, 0);
  recs.push_back(make_record("eigensystem.poly", "projector polynomial route",
                             (p0 - es.projectors[0]).max_abs(), 0.0, 1e-9));
  return recs;
}

std::vector<DemoRecord> demo_mub(const Options& opts, std::string*) {
  using namespace physkit::finhilb;
  int dim = opt_int(opts, "dim", 2);
  std::vector<CVec> basis;
  for (int i = 0; i < dim; ++i) {
    CVec e(dim, cplx(0));
    e[i] = 1.0;
    basis.push_back(e);
  }
  auto mub = mub_schwinger(basis);
  double maxdev = 0.0;
  for (const CVec& e : basis)
    for (const CVec& f : mub)
      maxdev = std::max(maxdev,
                        std::abs(std::norm(inner(e, f)) - 1.0 / dim));
  return {make_record("mub.overlap", "|<e|f>|^2 = 1/n", maxdev, 0.0, 1e-10)};
}

std::vector<DemoRecord> demo_kochen_specker(const Options&, std::string*) {
  using namespace physkit::finhilb;
  KSInstance inst = KSInstance::cabello18();
  KSResult r = ks_colorability(inst);
  return {make_record("kochen-specker", "Cabello 18-vector set uncolorable",
                      r.colorable ? 1.0 : 0.0, 0.0, 0.5)};
}

std::vector<DemoRecord> demo_singlet(const Options& opts,
                                     std::string* emitted) {
  using namespace physkit::finhilb;
  double t1 = opt_double(opts, "theta1", 0.5 * M_PI);
  double p1 = opt_double(opts, "phi1", 0.0);
  double t2 = opt_double(opts, "theta2", 0.5 * M_PI);
  double p2 = opt_double(opts, "phi2", 0.0);
  std::vector<DemoRecord> recs;
  double closed = singlet_correlation(t1, p1, t2, p2);
  double traced = singlet_correlation_trace(t1, p1, t2, p2);
  recs.push_back(make_record("singlet.routes", "closed form vs 4x4 trace",
                             std::abs(closed - traced), 0.0, 1e-12));
  recs.push_back(make_record("singlet.equal-directions", "E = -1",
                             singlet_correlation(t1, p1, t1, p1), -1.0,
                             1e-12));
  if (emitted && opt_str(opts, "out", "") == "csv") {
    *emitted += "phi,E\n";
    for (int i = 0; i <= 32; ++i) {
      double phi = M_PI * i / 32.0;
      *emitted += fmt(phi) + "," +
                  fmt(singlet_correlation(0.5 * M_PI, 0.0, 0.5 * M_PI, phi)) +
                  "\n";
    }
  }
  return recs;
}

using DemoFn =
    std::vector<DemoRecord> (*)(const Options&, std::string*);

const std::map<std::string, DemoFn>& registry() {
  static const std::map<std::string, DemoFn> reg = {
      {"sl-eigen", demo_sl_eigen},
      {"frobenius", demo_frobenius},
      {"green-first-order", demo_green_first_order},
      {"green-harmonic", demo_green_harmonic},
      {"beam", demo_beam},
      {"euler-series", demo_euler_series},
      {"sokhotsky", demo_sokhotsky},
      {"delta-seq", demo_delta_seq},
      {"residues", demo_residues},
      {"eigensystem", demo_eigensystem},
      {"mub", demo_mub},
      {"kochen-specker", demo_kochen_specker},
      {"singlet", demo_singlet},
  };
  return reg;
}

}  // namespace

double tolerance_scale() {
  const char* env = std::getenv("PHYSKIT_TOL");
  if (!env) return 1.0;
  double v = std::atof(env);
  return v > 0.0 ? v : 1.0;
}

DemoRecord make_record(const std::string& name, const std::string& anchor,
                       double computed, double expected, double tol,
                       bool relative) {
  DemoRecord r;
  r.name = name;
  r.anchor = anchor;
  r.computed = computed;
  r.expected = expected;
  r.tol = tol * tolerance_scale();
  r.relative = relative;
  double err = std::abs(computed - expected);
  double lim = relative ? r.tol * std::abs(expected) : r.tol;
  r.pass = err <= lim;
  return r;
}

std::vector<std::string> demo_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : registry()) names.push_back(k);
  return names;
}

bool has_demo(const std::string& name) { return registry().count(name) > 0; }

std::vector<DemoRecord> run_demo(const std::string& name, const Options& opts,
                                 std::string* emitted) {
  auto it = registry().find(name);
  if (it == registry().end())
    throw std::invalid_argument("unknown demo '" + name + "'");
  return it->second(opts, emitted);
}

}  // namespace physkit::demos
