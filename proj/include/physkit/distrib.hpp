#ifndef PHYSKIT_DISTRIB_HPP
#define PHYSKIT_DISTRIB_HPP

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace physkit::distrib {

using RealFn = std::function<double(double)>;
using cplx = std::complex<double>;

struct TestFunction {
  enum class Cls { compact_bump, gaussian, polynomial, generic_smooth };
  Cls cls = Cls::generic_smooth;
  RealFn value;
  // exact derivative (order, x) when available; empty -> central stencils
  std::function<double(int, double)> exact_derivative;
  std::optional<std::pair<double, double>> support;
  double window = 8.0;  // integration half-width for non-compact classes

  double operator()(double x) const { return value(x); }
  double derivative(int order, double x) const;
  std::pair<double, double> integration_range() const;
  bool decays() const;

  // e^{-1/(1-((x-a)/sigma)^2)} inside |x-a| < sigma, 0 outside.
  static TestFunction bump(double sigma, double a);
  // P(x) e^{-alpha x^2} with exact derivatives (P given by coefficients).
  static TestFunction poly_gaussian(std::vector<double> poly, double alpha,
                                    double window = 8.0);
  static TestFunction gaussian(double alpha, double window = 8.0);
  static TestFunction polynomial(std::vector<double> coeffs);
  static TestFunction smooth(RealFn f, double window);
};

struct Distribution {
  enum class Kind {
    delta,             // delta^{(order)}(x - center)
    heaviside,
    sign,
    abs_x,
    log_abs,
    pv_inverse_power,  // P(1/x^order), order >= 1
    pole,              // 1/(x + i*pole_sign*0+)
    regular            // pairing against an ordinary function
  };
  Kind kind = Kind::delta;
  int order = 0;
  double center = 0.0;
  int pole_sign = +1;
  RealFn regular_f;
  // optional smooth multiplier g with exact derivatives: g^{(k)}(x)
  std::function<double(int, double)> multiplier;

  static Distribution delta(int order = 0, double center = 0.0);
  static Distribution heaviside_d();
  static Distribution sign_d();
  static Distribution abs_d();
  static Distribution log_abs_d();
  static Distribution pv_power(int n);
  static Distribution pole_d(int sign);
  static Distribution regular_d(RealFn f);
  Distribution times_poly(const std::vector<double>& poly) const;
};

struct PairValue {
  cplx value;
  double err_estimate;
};

// <F, phi>; the pv/abs/log kinds use the one-sided reductions
// int_0^inf g(x) [phi(x) -+ phi(-x)] dx of the catalog.
PairValue pair(const Distribution& F, const TestFunction& phi);

// Weighted sums of catalog distributions (linear pairing).
using DistributionSum = std::vector<std::pair<double, Distribution>>;
PairValue pair(const DistributionSum& F, const TestFunction& phi);

enum class DeltaSeqKind { box, gaussian, lorentzian, dirichlet };
DeltaSeqKind delta_seq_kind_from_string(const std::string& s);

// Pointwise value of the n-th member of the delta sequence at x.
double delta_sequence_eval(DeltaSeqKind kind, int n, double x);

struct SeqPairRow {
  int n;
  double value;
  double gap;  // |value - phi(0)|
};
std::vector<SeqPairRow> pair_seq(DeltaSeqKind kind, const TestFunction& phi,
                                 const std::vector<int>& ns);

// delta(f(x)) = sum_i delta(x - x_i) / |f'(x_i)| over the simple roots.
DistributionSum compose_delta(const RealFn& df, const std::vector<double>& roots);

// Transfer derivative within the catalog: H' = delta, sgn' = 2 delta,
// |x|' = sgn, (log|x|)' = P(1/x), delta^{(n)}' = delta^{(n+1)}.
DistributionSum distribution_derivative(const Distribution& F);

struct SokhotskyResult {
  cplx limit;        // extrapolated int phi/(x +- i eps)
  cplx reference;    // pair(pv, phi) -+ i pi phi(0)
  double gap;        // |value at smallest eps - reference|
  std::vector<std::pair<double, cplx>> sweep;
};
SokhotskyResult sokhotsky_limit(int sign, const TestFunction& phi,
                                const std::vector<double>& eps_list = {});

// Moment coefficients f_k = (-1)^k / k! int f(y) y^k dy.
std::vector<double> delta_moment_expansion(const RealFn& f, int kmax,
                                           double window);

}  // namespace physkit::distrib

#endif
