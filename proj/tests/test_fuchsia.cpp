#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "physkit/fuchsia.hpp"
#include "physkit/quadrature.hpp"
#include "physkit/specfun.hpp"

using namespace physkit::fuchsia;
using physkit::quad::integrate;

namespace {

LinearODE2 ode_kummer_like() {  // z w'' + (1-z) w' = 0
  LinearODE2 o;
  o.a2 = [](cplx z) { return z; };
  o.a1 = [](cplx z) { return 1.0 - z; };
  o.a0 = [](cplx) { return cplx(0.0); };
  return o;
}

LinearODE2 ode_bessel_like(double nu) {  // z^2 w'' + z w' - nu^2 w = 0
  LinearODE2 o;
  o.a2 = [](cplx z) { return z * z; };
  o.a1 = [](cplx z) { return z; };
  o.a0 = [nu](cplx) { return cplx(-nu * nu); };
  return o;
}

LinearODE2 ode_two_pole() {  // z^2(1+z)^2 w'' + 2z(z+1)(z+2) w' - 4w = 0
  LinearODE2 o;
  o.a2 = [](cplx z) { return z * z * (1.0 + z) * (1.0 + z); };
  o.a1 = [](cplx z) { return 2.0 * z * (z + 1.0) * (z + 2.0); };
  o.a0 = [](cplx) { return cplx(-4.0); };
  return o;
}

LinearODE2 ode_ad4() {  // 2z(z+2) w'' + w' - z w = 0
  LinearODE2 o;
  o.a2 = [](cplx z) { return 2.0 * z * (z + 2.0); };
  o.a1 = [](cplx) { return cplx(1.0); };
  o.a0 = [](cplx z) { return -z; };
  return o;
}

LinearODE2 ode_worked_infinity() {  // z^2 w'' + (3z+1) w' + w = 0
  LinearODE2 o;
  o.a2 = [](cplx z) { return z * z; };
  o.a1 = [](cplx z) { return 3.0 * z + 1.0; };
  o.a0 = [](cplx) { return cplx(1.0); };
  return o;
}

LinearODE2 ode_transformed_worked() {  // t^2 u'' - (t+t^2) u' + u = 0
  LinearODE2 o;
  o.a2 = [](cplx t) { return t * t; };
  o.a1 = [](cplx t) { return -(t + t * t); };
  o.a0 = [](cplx) { return cplx(1.0); };
  return o;
}

}  // namespace

TEST_CASE("classification: worked 'ad' examples") {
  // ad 1 at z = 0: regular singular, alpha0 = 1, beta0 = 0
  PointClass c = classify_point(ode_kummer_like(), 0.0);
  CHECK(c.kind == PointKind::regular_singular);
  CHECK(std::abs(c.alpha0 - cplx(1.0)) < 1e-9);
  CHECK(std::abs(c.beta0) < 1e-9);
  // ad 1 at infinity: irregular
  CHECK(classify_point_at_infinity(ode_kummer_like()).kind ==
        PointKind::irregular_singular);

  // ad 2 at z = 0: alpha0 = 1, beta0 = -nu^2
  double nu = 1.7;
  PointClass b = classify_point(ode_bessel_like(nu), 0.0);
  CHECK(b.kind == PointKind::regular_singular);
  CHECK(std::abs(b.alpha0 - cplx(1.0)) < 1e-9);
  CHECK(std::abs(b.beta0 - cplx(-nu * nu)) < 1e-8);
  auto [s1, s2] = characteristic_exponents(b.alpha0, b.beta0);
  CHECK(std::abs(s1 - cplx(nu)) < 1e-8);
  CHECK(std::abs(s2 - cplx(-nu)) < 1e-8);
  // Fuchsian at infinity too (alpha0 = 1, beta0 = -nu^2)
  PointClass binf = classify_point_at_infinity(ode_bessel_like(nu));
  CHECK(binf.kind == PointKind::regular_singular);
  CHECK(std::abs(binf.alpha0 - cplx(1.0)) < 1e-8);

  // ad 3 at 0: alpha0 = 4, beta0 = -4, sigma = {1, -4}
  PointClass t0 = classify_point(ode_two_pole(), 0.0, 0.4);
  CHECK(t0.kind == PointKind::regular_singular);
  CHECK(std::abs(t0.alpha0 - cplx(4.0)) < 1e-8);
  CHECK(std::abs(t0.beta0 - cplx(-4.0)) < 1e-8);
  auto [u1, u2] = characteristic_exponents(4.0, -4.0);
  CHECK(std::abs(u1 - cplx(1.0)) < 1e-12);
  CHECK(std::abs(u2 - cplx(-4.0)) < 1e-12);
  // ad 3 at -1: alpha0 = -2, beta0 = -4, sigma = {4, -1}
  PointClass tm1 = classify_point(ode_two_pole(), -1.0, 0.4);
  CHECK(tm1.kind == PointKind::regular_singular);
  CHECK(std::abs(tm1.alpha0 - cplx(-2.0)) < 1e-8);
  CHECK(std::abs(tm1.beta0 - cplx(-4.0)) < 1e-8);
  auto [v1, v2] = characteristic_exponents(-2.0, -4.0);
  CHECK(std::abs(v1 - cplx(4.0)) < 1e-12);
  CHECK(std::abs(v2 - cplx(-1.0)) < 1e-12);
  // ad 3 at infinity: alpha0 = beta0 = 0 (the transformed coefficients are
  // analytic at t=0, so the point is ordinary and sigma = {1, 0} is the
  // trivial indicial pair)
  PointClass tinf = classify_point_at_infinity(ode_two_pole());
  CHECK(tinf.kind == PointKind::ordinary);
  auto [w1, w2] = characteristic_exponents(0.0, 0.0);
  CHECK(std::abs(w1 - cplx(1.0)) < 1e-12);
  CHECK(std::abs(w2) < 1e-12);

  // ad 4 at 0: alpha0 = 1/4, beta0 = 0, sigma = {3/4, 0}
  PointClass a4 = classify_point(ode_ad4(), 0.0, 0.4);
  CHECK(a4.kind == PointKind::regular_singular);
  CHECK(std::abs(a4.alpha0 - cplx(0.25)) < 1e-8);
  CHECK(std::abs(a4.beta0) < 1e-9);
  auto [x1, x2] = characteristic_exponents(0.25, 0.0);
  CHECK(std::abs(x1 - cplx(0.75)) < 1e-12);
  CHECK(std::abs(x2) < 1e-12);
  // ad 4 at -2: the printed alpha0 = -1/4 lands on sigma = {5/4, 0}
  PointClass a4m = classify_point(ode_ad4(), -2.0, 0.4);
  CHECK(a4m.kind == PointKind::regular_singular);
  CHECK(std::abs(a4m.alpha0 - cplx(-0.25)) < 1e-8);
  auto [y1, y2] = characteristic_exponents(-0.25, 0.0);
  CHECK(std::abs(y1 - cplx(1.25)) < 1e-12);
  CHECK(std::abs(y2) < 1e-12);
  // ad 4 at infinity: not Fuchsian
  CHECK(classify_point_at_infinity(ode_ad4()).kind ==
        PointKind::irregular_singular);

  // worked example: z = 0 irregular, infinity regular singular with sigma 1
  CHECK(classify_point(ode_worked_infinity(), 0.0).kind ==
        PointKind::irregular_singular);
  PointClass winf = classify_point_at_infinity(ode_worked_infinity());
  CHECK(winf.kind == PointKind::regular_singular);
  auto [z1, z2] = characteristic_exponents(winf.alpha0, winf.beta0);
  CHECK(std::abs(z1 - cplx(1.0)) < 1e-7);
  CHECK(std::abs(z2 - cplx(1.0)) < 1e-7);

  // ordinary point
  CHECK(classify_point(ode_bessel_like(1.0), 2.0).kind == PointKind::ordinary);
}

TEST_CASE("evaluation failure is reported distinctly from irregularity") {
  LinearODE2 o;  // coefficients blow up to NaN on the sample ray
  o.a2 = [](cplx z) { return std::abs(z) < 0.3 ? cplx(0.0) : z; };
  o.a1 = [](cplx) { return cplx(1.0); };
  o.a0 = [](cplx) { return cplx(1.0); };
  CHECK_THROWS_AS((void)classify_point(o, 0.0, 0.5), std::runtime_error);
}

TEST_CASE("classification via rational data matches the callables") {
  LinearODE2 o = ode_two_pole();
  RationalCoeffs rc;
  // p1 = 2(z+2)/(z(z+1)) = 4/z - 2/(z+1); p2 = -4/(z^2 (1+z)^2)
  //    = -4/z^2 + 8/z - 4/(z+1)^2 - 8/(z+1)
  rc.poles.push_back({cplx(0.0), 4.0, -4.0, 8.0});
  rc.poles.push_back({cplx(-1.0), -2.0, -4.0, -8.0});
  o.rational = rc;
  CHECK_NOTHROW(o.validate_rational());
  PointClass c = classify_point(o, 0.0);
  CHECK(std::abs(c.alpha0 - cplx(4.0)) < 1e-14);
  CHECK(std::abs(c.beta0 - cplx(-4.0)) < 1e-14);
  // a corrupted descriptor is rejected
  o.rational->poles[0].A = 3.9;
  CHECK_THROWS_AS(o.validate_rational(), std::runtime_error);
}

TEST_CASE("classify at infinity agrees with the transformed operator at 0") {
  for (const LinearODE2& o :
       {ode_bessel_like(0.8), ode_two_pole(), ode_worked_infinity()}) {
    PointClass direct = classify_point_at_infinity(o);
    LinearODE2 t = transform_to_infinity(o);
    PointClass via = classify_point(t, 0.0, 0.25);
    CHECK(direct.kind == via.kind);
    if (direct.kind == PointKind::regular_singular) {
      CHECK(std::abs(direct.alpha0 - via.alpha0) < 1e-7);
      CHECK(std::abs(direct.beta0 - via.beta0) < 1e-7);
    }
  }
}

TEST_CASE("characteristic exponents: printed pairs") {
  auto [a1, a2] = characteristic_exponents(1.0, 0.0);
  CHECK(std::abs(a1) < 1e-14);
  CHECK(std::abs(a2) < 1e-14);
  auto [b1, b2] = characteristic_exponents(0.25, 0.0);
  CHECK(std::abs(b1 - cplx(0.75)) < 1e-14);
  CHECK(std::abs(b2) < 1e-14);
  auto [c1, c2] = characteristic_exponents(4.0, -4.0);
  CHECK(std::abs(c1 - cplx(1.0)) < 1e-14);
  CHECK(std::abs(c2 - cplx(-4.0)) < 1e-14);
}

TEST_CASE("complex characteristic exponents come as a conjugate pair") {
  // sigma(sigma-1) + sigma + 1 = 0: sigma = +-i
  auto [s1, s2] = characteristic_exponents(1.0, 1.0);
  CHECK(std::abs(s1.real()) < 1e-14);
  CHECK(std::abs(s1.imag() - 1.0) < 1e-14);
  CHECK(std::abs(s2 - std::conj(s1)) < 1e-14);
  CHECK(s1.imag() >= s2.imag());  // tie on real part broken by imag
}

TEST_CASE("frobenius: first-order y' = lambda y") {
  double lambda = 1.7;
  LinearODE2 o;
  o.a2 = [](cplx) { return cplx(0.0); };
  o.a1 = [](cplx) { return cplx(1.0); };
  o.a0 = [lambda](cplx) { return cplx(-lambda); };
  PowerSeriesSolution s = frobenius_solve(o, 0.0, 0.0, 12);
  double fact = 1.0;
  for (int j = 0; j <= 12; ++j) {
    if (j > 0) fact *= j;
    CHECK(std::abs(s.coeffs[j] - std::pow(lambda, j) / fact) < 1e-12);
  }
  CHECK(std::abs(s.eval(0.3) - std::exp(lambda * 0.3)) < 1e-9);
}

TEST_CASE("frobenius: worked second-order example w_n = 1/n!") {
  PowerSeriesSolution s = frobenius_solve(ode_transformed_worked(), 0.0, 1.0, 10);
  double fact = 1.0;
  for (int j = 0; j <= 10; ++j) {
    if (j > 0) fact *= j;
    CHECK(std::abs(s.coeffs[j] - 1.0 / fact) < 1e-12);
  }
  // u_1(t) = t e^t
  for (double t : {0.1, 0.3, 0.45})
    CHECK(std::abs(s.eval(t) - t * std::exp(t)) < 1e-9);
}

TEST_CASE("frobenius: Legendre termination at l = 2") {
  LinearODE2 o;  // (1-x^2) y'' - 2x y' + 6 y = 0
  o.a2 = [](cplx z) { return 1.0 - z * z; };
  o.a1 = [](cplx z) { return -2.0 * z; };
  o.a0 = [](cplx) { return cplx(6.0); };
  PowerSeriesSolution s = frobenius_solve(o, 0.0, 0.0, 12);
  CHECK(std::abs(s.coeffs[0] - cplx(1.0)) < 1e-12);
  CHECK(std::abs(s.coeffs[1]) < 1e-12);
  CHECK(std::abs(s.coeffs[2] - cplx(-3.0)) < 1e-10);
  for (int j = 3; j <= 12; ++j) CHECK(std::abs(s.coeffs[j]) < 1e-10);
  // proportional to 3x^2 - 1 = -2 P_2
  for (double x : {-0.5, 0.2, 0.7})
    CHECK(std::abs(s.eval(x) - (1.0 - 3.0 * x * x)) < 1e-9);
}

TEST_CASE("frobenius: radius hint from rational data") {
  LinearODE2 o = ode_two_pole();
  RationalCoeffs rc;
  rc.poles.push_back({cplx(0.0), 4.0, -4.0, 8.0});
  rc.poles.push_back({cplx(-1.0), -2.0, -4.0, -8.0});
  o.rational = rc;
  PowerSeriesSolution s = frobenius_solve(o, 0.0, 1.0, 6);
  CHECK(s.radius_hint == doctest::Approx(1.0));  // distance to z = -1
  PowerSeriesSolution noc = frobenius_solve(ode_transformed_worked(), 0.0, 1.0, 6);
  CHECK(noc.radius_hint == 0.0);  // unset without rational data
}

TEST_CASE("frobenius: inconsistent resonance carries the offending n") {
  // Bessel-type with nu = 1: sigma difference 2; at sigma = -1 the n = 2
  // equation is obstructed for generic a0 perturbation
  LinearODE2 o;
  o.a2 = [](cplx z) { return z * z; };
  o.a1 = [](cplx z) { return z; };
  o.a0 = [](cplx z) { return z - 1.0; };  // sigma = +-1, beta_1 = 1 forces w_1
  try {
    (void)frobenius_solve(o, 0.0, cplx(-1.0), 8);
    FAIL("expected resonance error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("n = 2") != std::string::npos);
  }
}

TEST_CASE("frobenius residual drops by at least 8x when h halves") {
  struct Case {
    LinearODE2 o;
    cplx sigma;
  };
  std::vector<Case> cases;
  cases.push_back({ode_transformed_worked(), 1.0});
  {
    LinearODE2 bess;  // true Bessel: z^2 w'' + z w' + (z^2 - nu^2) w = 0
    bess.a2 = [](cplx z) { return z * z; };
    bess.a1 = [](cplx z) { return z; };
    bess.a0 = [](cplx z) { return z * z - 0.25; };
    cases.push_back({bess, 0.5});
  }
  {
    LinearODE2 leg;
    leg.a2 = [](cplx z) { return 1.0 - z * z; };
    leg.a1 = [](cplx z) { return -2.0 * z; };
    leg.a0 = [](cplx) { return cplx(3.75); };  // non-terminating lambda
    cases.push_back({leg, 0.0});
  }
  for (auto& cs : cases) {
    PowerSeriesSolution s = frobenius_solve(cs.o, 0.0, cs.sigma, 8, 0.45);
    auto residual = [&](double h) {
      cplx x(h);
      cplx r = cs.o.a2(x) * s.eval_derivative(x, 2) +
               cs.o.a1(x) * s.eval_derivative(x, 1) + cs.o.a0(x) * s.eval(x);
      return std::abs(r);
    };
    double r1 = residual(0.4), r2 = residual(0.2);
    CHECK(r1 > 1e-14);  // above noise
    CHECK(r2 <= r1 / 8.0);
  }
}

TEST_CASE("d'Alembert second solution for the worked example") {
  LinearODE2 o = ode_transformed_worked();
  auto y1 = [](double t) { return t * std::exp(t); };
  auto dy1 = [](double t) { return std::exp(t) * (1.0 + t); };
  std::vector<double> grid;
  const int N = 2048;
  double lo = 0.5, hi = 3.0;
  for (int i = 0; i <= N; ++i) grid.push_back(lo + (hi - lo) * i / N);
  std::vector<double> y2 = dalembert_second_solution(o, y1, dy1, grid);

  // expected (same anchor): t e^t int_{0.5}^t s^{-1} e^{-s} ds
  auto expected = [&](double t) {
    return y1(t) * integrate([](double s) { return std::exp(-s) / s; }, lo, t,
                             1e-12);
  };
  // proportionality (constant v scale drops out of the comparison)
  double scale = y2[N / 2] / expected(grid[N / 2]);
  for (int i = N / 8; i <= N; i += N / 8)
    CHECK(std::abs(y2[i] - scale * expected(grid[i])) < 1e-7);

  // Wronskian y1 y2' - y1' y2 is nonvanishing on the interior
  double h = (hi - lo) / N;
  for (int i = 8; i < N - 8; i += 64) {
    double dy2 = (y2[i + 1] - y2[i - 1]) / (2.0 * h);
    double w = y1(grid[i]) * dy2 - dy1(grid[i]) * y2[i];
    CHECK(std::abs(w) > 1e-6);
  }

  // ODE residual by high-order finite differences away from t = 0
  auto d1 = [&](int i) {
    return (-y2[i + 2] + 8 * y2[i + 1] - 8 * y2[i - 1] + y2[i - 2]) /
           (12.0 * h);
  };
  auto d2 = [&](int i) {
    return (-y2[i + 2] + 16 * y2[i + 1] - 30 * y2[i] + 16 * y2[i - 1] -
            y2[i - 2]) /
           (12.0 * h * h);
  };
  for (int i = 16; i < N - 16; i += 128) {
    double t = grid[i];
    double res = t * t * d2(i) - (t + t * t) * d1(i) + y2[i];
    CHECK(std::abs(res) < 1e-7 * std::max(1.0, std::abs(y2[i])));
  }

  // zero-crossing error
  std::vector<double> bad = {-0.5, 0.0, 0.5};
  CHECK_THROWS_AS(
      (void)dalembert_second_solution(o, [](double t) { return t; },
                                      [](double) { return 1.0; }, bad),
      std::runtime_error);
}

TEST_CASE("to_sturm_liouville: worked conversions") {
  // x^2 y'' + 3x y' + y = -lambda y on [1,2]: p = x^3, q = x, rho = x
  LinearODE2 o;
  o.a2 = [](cplx z) { return z * z; };
  o.a1 = [](cplx z) { return 3.0 * z; };
  o.a0 = [](cplx) { return cplx(1.0); };
  SturmLiouvilleForm f = to_sturm_liouville(o, nullptr, 1.0);
  for (double x : {1.0, 1.3, 1.7, 2.0}) {
    CHECK(f.p(x) == doctest::Approx(x * x * x).epsilon(1e-10));
    CHECK(f.q(x) == doctest::Approx(x).epsilon(1e-10));
    CHECK(f.rho(x) == doctest::Approx(x).epsilon(1e-10));
  }
  // already-SL input (a1 = a2'): p = a2 up to a constant
  LinearODE2 sl;
  sl.a2 = [](cplx z) { return 1.0 + z * z; };
  sl.a1 = [](cplx z) { return 2.0 * z; };
  sl.a0 = [](cplx) { return cplx(0.0); };
  SturmLiouvilleForm g = to_sturm_liouville(sl, nullptr, 0.0);
  double c0 = g.p(0.5) / (1.0 + 0.25);
  for (double x : {0.0, 1.0, 1.5})
    CHECK(g.p(x) == doctest::Approx(c0 * (1.0 + x * x)).epsilon(1e-9));
  // Legendre operator: p = 1 - x^2 anchored at 0
  LinearODE2 leg;
  leg.a2 = [](cplx z) { return 1.0 - z * z; };
  leg.a1 = [](cplx z) { return -2.0 * z; };
  leg.a0 = [](cplx) { return cplx(0.0); };
  SturmLiouvilleForm h = to_sturm_liouville(leg, nullptr, 0.0);
  for (double x : {-0.8, -0.3, 0.4, 0.9})
    CHECK(h.p(x) == doctest::Approx(1.0 - x * x).epsilon(1e-9));

  // self-adjointness: p' = p a1/a2 at 32 points
  for (int i = 0; i < 32; ++i) {
    double x = 1.0 + (i + 0.5) / 32.0;
    double dp = physkit::quad::derivative(f.p, x, 1, 1e-4);
    CHECK(std::abs(dp - f.p(x) * 3.0 / x) < 1e-10 * std::max(1.0, dp));
  }
}

TEST_CASE("Liouville normal form of the worked problem") {
  auto p = [](double x) { return x * x * x; };
  auto q = [](double x) { return x; };
  auto rho = [](double x) { return x; };
  LiouvilleNormalForm nf = liouville_normal_form(p, q, rho, 1.0);
  for (double x : {1.0, 1.2, 1.5, 2.0})
    CHECK(nf.t(x) == doctest::Approx(std::log(x)).epsilon(1e-10));
  // q-hat vanishes on 32 grid points
  for (int i = 0; i < 32; ++i) {
    double x = 1.05 + 0.9 * i / 31.0;
    CHECK(std::abs(nf.qhat(x)) < 1e-9);
  }
  // trivial p = rho = 1, q = 0
  LiouvilleNormalForm id = liouville_normal_form(
      [](double) { return 1.0; }, [](double) { return 0.0; },
      [](double) { return 1.0; }, 0.0);
  CHECK(id.t(0.8) == doctest::Approx(0.8));
  CHECK(std::abs(id.qhat(0.5)) < 1e-9);
  // positivity violation
  LiouvilleNormalForm badnf = liouville_normal_form(
      [](double x) { return x; }, [](double) { return 0.0; },
      [](double) { return 1.0; }, -1.0);
  CHECK_THROWS_AS((void)badnf.t(-0.5), std::domain_error);
}

TEST_CASE("shooting eigensolver on the worked problem") {
  SturmLiouvilleProblem pr;
  pr.p = [](double x) { return x * x * x; };
  pr.q = [](double x) { return x; };
  pr.rho = [](double x) { return x; };
  pr.a = 1.0;
  pr.b = 2.0;
  const double log2 = std::log(2.0);

  std::vector<EigenSolution> sols;
  for (int n = 1; n <= 4; ++n) {
    double exact = std::pow(n * M_PI / log2, 2);
    EigenSolution s = sl_eigen_shoot(pr, n, exact - 12.0, exact + 12.0);
    CHECK(std::abs(s.lambda - exact) <= 1e-7 * exact);
    CHECK(s.interior_zeros == n - 1);
    // weighted norm is 1
    double nrm = 0.0;
    double h = s.x[1] - s.x[0];
    for (size_t i = 0; i + 1 < s.x.size(); ++i)
      nrm += 0.5 * h *
             (s.phi[i] * s.phi[i] * pr.rho(s.x[i]) +
              s.phi[i + 1] * s.phi[i + 1] * pr.rho(s.x[i + 1]));
    CHECK(std::abs(nrm - 1.0) < 1e-6);
    sols.push_back(std::move(s));
  }
  // strictly increasing eigenvalues
  for (size_t i = 1; i < sols.size(); ++i)
    CHECK(sols[i].lambda > sols[i - 1].lambda);

  // pointwise closed form to 1e-5 (sign-matched)
  for (int n = 1; n <= 3; ++n) {
    const EigenSolution& s = sols[n - 1];
    auto ref = [&](double x) {
      return std::sqrt(2.0 / log2) / x * std::sin(n * M_PI * std::log(x) / log2);
    };
    double ov = 0.0;
    for (size_t i = 0; i < s.x.size(); i += 16) ov += s.phi[i] * ref(s.x[i]);
    double sgn = ov >= 0 ? 1.0 : -1.0;
    for (size_t i = 0; i < s.x.size(); i += 97)
      CHECK(std::abs(sgn * s.phi[i] - ref(s.x[i])) < 1e-5);
  }

  // rho-orthogonality of distinct eigenfunctions
  for (size_t a = 0; a < sols.size(); ++a)
    for (size_t b = a + 1; b < sols.size(); ++b) {
      double ip = 0.0;
      double h = sols[a].x[1] - sols[a].x[0];
      for (size_t i = 0; i + 1 < sols[a].x.size(); ++i)
        ip += 0.5 * h *
              (sols[a].phi[i] * sols[b].phi[i] * pr.rho(sols[a].x[i]) +
               sols[a].phi[i + 1] * sols[b].phi[i + 1] *
                   pr.rho(sols[a].x[i + 1]));
      CHECK(std::abs(ip) < 1e-6);
    }

  // bracket error (no eigenvalue between lambda_1 and lambda_2)
  CHECK_THROWS_AS((void)sl_eigen_shoot(pr, 1, 30.0, 60.0),
                  std::runtime_error);
  // only Dirichlet supported
  SturmLiouvilleProblem nm = pr;
  nm.bc = SturmLiouvilleProblem::BC::neumann;
  CHECK_THROWS_AS((void)sl_eigen_shoot(nm, 1, 10.0, 30.0),
                  std::invalid_argument);
  // positivity validation
  SturmLiouvilleProblem bad = pr;
  bad.p = [](double x) { return x - 1.5; };
  CHECK_THROWS_AS((void)sl_eigen_shoot(bad, 1, 10.0, 30.0), std::domain_error);
}
