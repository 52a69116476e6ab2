#ifndef PHYSKIT_FUCHSIA_HPP
#define PHYSKIT_FUCHSIA_HPP

#include <complex>
#include <functional>
#include <optional>
#include <vector>

namespace physkit::fuchsia {

using cplx = std::complex<double>;
using CoefFn = std::function<cplx(cplx)>;
using RealFn = std::function<double(double)>;

// Partial-fraction data for p1 = a1/a2 and p2 = a0/a2:
//   p1 = sum_j A_j/(x-x_j),  p2 = sum_j [ B_j/(x-x_j)^2 + C_j/(x-x_j) ].
struct RationalCoeffs {
  struct Pole {
    cplx x;
    cplx A, B, C;
  };
  std::vector<Pole> poles;
  cplx p1(cplx z) const;
  cplx p2(cplx z) const;
};

struct LinearODE2 {
  CoefFn a2, a1, a0;
  std::optional<RationalCoeffs> rational;

  cplx p1(cplx z) const { return a1(z) / a2(z); }
  cplx p2(cplx z) const { return a0(z) / a2(z); }

  // True if a2 vanishes identically near x0 (first-order equation).
  bool first_order_near(cplx x0) const;

  // Rational descriptors must match the callables at 16 points to 1e-12.
  void validate_rational(unsigned seed = 20240915) const;
};

enum class PointKind { ordinary, regular_singular, irregular_singular };

struct PointClass {
  PointKind kind;
  cplx alpha0{};  // lim (x-x0) p1
  cplx beta0{};   // lim (x-x0)^2 p2
};

// Classification at a finite point. Limits come from rational data when
// present, else from Richardson-extrapolated evaluations at x0 + h 2^{-k}.
PointClass classify_point(const LinearODE2& ode, cplx x0, double h = 0.5);

// Classification at infinity through the 1/z substitution.
PointClass classify_point_at_infinity(const LinearODE2& ode, double h = 0.25);

// The transformed operator u'' + p1~(t) u' + p2~(t) u = 0 with t = 1/z.
LinearODE2 transform_to_infinity(const LinearODE2& ode);

// Roots of sigma(sigma-1) + alpha0 sigma + beta0 = 0, decreasing real part.
std::pair<cplx, cplx> characteristic_exponents(cplx alpha0, cplx beta0);

struct PowerSeriesSolution {
  cplx x0;
  cplx sigma;
  std::vector<cplx> coeffs;  // w_0..w_N, w_0 = 1
  double radius_hint = 0.0;  // 0: unset

  cplx eval(cplx x) const;
  cplx eval_derivative(cplx x, int order) const;
};

// Generalized power series solution about an ordinary or regular singular
// point. Consistent resonances (f0(sigma+n)=0 with vanishing right side)
// set w_n = 0; inconsistent ones throw with the offending n in the message.
PowerSeriesSolution frobenius_solve(const LinearODE2& ode, cplx x0, cplx sigma,
                                    int nterms = 24, double series_radius = 0.0);

// d'Alembert reduction: y2(x) = y1(x) int_{x_r}^x v, with
// v' + v (2 y1'/y1 + p1) = 0 solved in closed exponential form and the
// integrals done by quadrature; x_r is the first grid point.
std::vector<double> dalembert_second_solution(const LinearODE2& ode,
                                              const RealFn& y1,
                                              const RealFn& dy1,
                                              const std::vector<double>& grid);

struct SturmLiouvilleForm {
  RealFn p, q, F, rho;
};

// Rewrite a2 y'' + a1 y' + a0 y = f into (p y')' + q y = F with
// p = exp(int_{x_ref}^x a1/a2); for the eigenform f = -lambda w(x) y the
// returned rho = p w / a2.
SturmLiouvilleForm to_sturm_liouville(const LinearODE2& ode, const RealFn& f,
                                      double x_ref,
                                      const RealFn& weight = nullptr);

struct LiouvilleNormalForm {
  RealFn t;          // t(x) = int_a^x sqrt(rho/p)
  RealFn amplitude;  // (p rho)^{1/4}
  RealFn qhat;       // q-hat as a function of x (compose with x(t) if needed)
};

LiouvilleNormalForm liouville_normal_form(const RealFn& p, const RealFn& q,
                                          const RealFn& rho, double a);

struct SturmLiouvilleProblem {
  RealFn p, q, rho;
  double a = 0.0, b = 1.0;
  enum class BC { dirichlet, neumann, periodic } bc = BC::dirichlet;
  double ya = 0.0, yb = 0.0;
  void validate(int samples = 32) const;  // p, rho > 0 on (a,b)
};

struct EigenSolution {
  double lambda;
  std::vector<double> x, phi;  // rho-normalized eigenfunction samples
  int interior_zeros;
};

// Shooting eigensolver (RK4, 4096 fixed steps, one Richardson halving;
// bisection on the right-boundary mismatch, 80 iterations).
EigenSolution sl_eigen_shoot(const SturmLiouvilleProblem& prob, int n,
                             double lambda_lo, double lambda_hi);

}  // namespace physkit::fuchsia

#endif
