#ifndef PHYSKIT_SPECFUN_HPP
#define PHYSKIT_SPECFUN_HPP

#include <complex>
#include <functional>
#include <vector>

namespace physkit::specfun {

using RealFn = std::function<double(double)>;

// Shifted factorial (a)_n = a(a+1)...(a+n-1), (a)_0 = 1.
double pochhammer(double a, int n);

// log Gamma for x > 0 (Lanczos-type fixed-coefficient approximation).
double lgamma_pos(double x);

// Gamma on the real line; throws std::domain_error at the poles 0,-1,-2,...
double gamma_real(double x);

// Euler beta B(x,y) = Gamma(x)Gamma(y)/Gamma(x+y) for x,y > 0.
double beta(double x, double y);

struct HypergeometricSpec {
  std::vector<double> upper;  // a_1..a_p
  std::vector<double> lower;  // b_1..b_q
  double x = 0.0;
  double tolerance = 1e-15;
  int max_terms = 2000;
  void validate() const;
};

struct HypSum {
  double value;
  int terms;  // number of terms actually summed
};

// Generalized hypergeometric series pFq evaluated by its term recurrence.
// Terminates exactly when some upper parameter is a nonpositive integer.
// For p = q+1 at x = 1 with sum(lower)-sum(upper) > 0 the partial sum is
// completed with an Euler-Maclaurin tail estimate (Gauss point).
HypSum hyp_pfq(const HypergeometricSpec& spec);

double hyp_2f1(double a, double b, double c, double x);
double hyp_1f1(double a, double b, double x);

// Complex-argument variant of the series, same stopping rule.
std::complex<double> hyp_pfq_complex(const std::vector<double>& upper,
                                     const std::vector<double>& lower,
                                     std::complex<double> x,
                                     double tolerance = 1e-15,
                                     int max_terms = 2000);

// Legendre / associated Legendre P_l^m(x) with the Condon-Shortley factor;
// m = 0 gives P_l(x) with P_l(1) = 1, negative m via the factorial ratio.
double legendre_p(int l, int m, double x);

// d/dx P_l(x) from the recursion-differentiated relation.
double legendre_p_derivative(int l, double x);

// Normalized spherical harmonic Y_l^m(theta, phi).
std::complex<double> spherical_harmonic(int l, int m, double theta, double phi);

struct OrthogonalSystem {
  double a = 0.0, b = 0.0;
  RealFn weight;
  std::vector<RealFn> functions;
  std::vector<double> norms;  // <phi_k | phi_k>
};

// Weighted inner product int_a^b f g rho dx by refined Gauss quadrature.
double inner_product(const RealFn& f, const RealFn& g, const RealFn& rho,
                     double a, double b, double tol = 1e-11);

// Gram-Schmidt orthogonalization of function lists under the weighted inner
// product; output spans the inputs degree by degree. Throws on degeneracy.
OrthogonalSystem gram_schmidt_functions(const std::vector<RealFn>& fs,
                                        const RealFn& rho, double a, double b,
                                        double tol = 1e-11);

enum class PolyKind { hermite, laguerre, assoc_laguerre, chebyshev1 };

// Classical polynomials evaluated through their pFq representations.
// alpha is used by assoc_laguerre only.
double classical_polynomial(PolyKind kind, int n, double alpha, double x);

}  // namespace physkit::specfun

#endif
