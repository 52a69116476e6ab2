#ifndef PHYSKIT_DIVSUM_HPP
#define PHYSKIT_DIVSUM_HPP

#include <functional>
#include <vector>

namespace physkit::divsum {

using CoeffFn = std::function<double(int)>;  // j -> a_j

struct SeriesSpec {
  CoeffFn coeff;
  enum class Kind { numeric_series, power_series_at_x } kind =
      Kind::numeric_series;
  double x = 0.0;
};

// s_n = sum_{j<=n} a_j (x^j folded in for the power-series kind).
double partial_sum(const SeriesSpec& spec, int n);

struct AbelResult {
  double value;                    // extrapolated to eps -> 0
  double spread;                   // |extrapolated - innermost radius value|
  std::vector<double> radii;       // eps_k
  std::vector<double> boundary;    // f(1 - eps_k)
};

// Abel sum of sum a_j: evaluate f(1-eps_k) for eps_k = 2^{-k}, k = 4..16 by
// compensated summation, then extrapolate linearly in eps on the last two
// radii. Throws if the boundary values grow without bound.
AbelResult abel_sum(const CoeffFn& coeff,
                    const std::vector<double>& eps_list = {});

// Borel sum: int_0^inf e^{-t} B(t) dt with B the Borel transform
// sum a_j t^j / j! (truncated at nterms), integrated by Gauss-Laguerre of
// the given order with a cross-check at 3/2 the order.
struct BorelResult {
  double value;
  double cross_check_delta;
};
BorelResult borel_sum(const CoeffFn& coeff, int nterms = 400,
                      int quad_order = 64);

// Borel transform value at t: plain compensated partial sum when the series
// has converged within nterms, otherwise iterated-Aitken acceleration of the
// partial-sum sequence. Throws on term overflow.
double borel_transform(const CoeffFn& coeff, int nterms, double t);

// S(x) = int_0^inf e^{-xi/x} / (1+xi) dxi, exact solution of the Euler
// equation (x^2 d/dx + 1) y = x; absolute error below 1e-10.
double stieltjes_euler(double x);

struct TruncationReport {
  double gap;    // |S(x) - s_k(x)|, s_k the k-term partial sum (j <= k-1)
  double bound;  // k! x^{k+1}
  bool within_bound;
};
TruncationReport euler_truncation_error(double x, int k);

}  // namespace physkit::divsum

#endif
