#ifndef PHYSKIT_FINHILB_HPP
#define PHYSKIT_FINHILB_HPP

#include <array>
#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace physkit::finhilb {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);
  static ComplexMatrix identity(int n);
  static ComplexMatrix from_rows(const std::vector<CVec>& rows);
  static ComplexMatrix diag(const CVec& d);
  static ComplexMatrix column(const CVec& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  cplx& operator()(int i, int j) { return e_[i * cols_ + j]; }
  cplx operator()(int i, int j) const { return e_[i * cols_ + j]; }

  ComplexMatrix operator+(const ComplexMatrix& o) const;
  ComplexMatrix operator-(const ComplexMatrix& o) const;
  ComplexMatrix operator*(const ComplexMatrix& o) const;
  ComplexMatrix operator*(cplx s) const;
  friend ComplexMatrix operator*(cplx s, const ComplexMatrix& m) {
    return m * s;
  }
  CVec operator*(const CVec& v) const;

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  cplx trace() const;
  cplx det() const;  // cofactor expansion for n <= 4, pivoted LU above
  double max_abs() const;
  bool is_hermitian(double tol = 1e-12) const;

 private:
  int rows_ = 0, cols_ = 0;
  CVec e_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
CVec kron_vec(const CVec& a, const CVec& b);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

cplx inner(const CVec& a, const CVec& b);  // conjugate-linear in a
double norm(const CVec& v);

// Cyclic Jacobi eigensolver for real symmetric matrices (30 sweeps max,
// off-diagonal threshold 1e-13); eigenvalues ascending, vectors as columns.
void jacobi_symmetric(std::vector<std::vector<double>>& a,
                      std::vector<double>& eigenvalues,
                      std::vector<std::vector<double>>& vectors);

struct EigenSystem {
  std::vector<double> eigenvalues;          // distinct, ascending
  std::vector<ComplexMatrix> projectors;    // one per cluster
  std::vector<int> multiplicities;
  // one orthonormal eigenvector per one-dimensional cluster slot
  std::vector<CVec> eigenvectors;           // phase: first nonzero real > 0
  std::vector<double> eigenvalue_per_vector;
};

// Spectral decomposition of a Hermitian matrix via the 2n-dimensional
// real-symmetric embedding; eigenvalues within 1e-8 (1+|l|) are merged.
EigenSystem hermitian_eigen(const ComplexMatrix& m);

// p_i(M) = prod_{j != i} (M - l_j I)/(l_i - l_j) for distinct eigenvalues.
ComplexMatrix spectral_projector_poly(const ComplexMatrix& m,
                                      const std::vector<double>& eigenvalues,
                                      int i);

// Rank-1 projector v v^dagger / <v|v>.
ComplexMatrix projector(const CVec& v);

// Columns of B^{-1} for a basis given as matrix rows; throws when singular.
std::vector<CVec> dual_basis(const ComplexMatrix& basis_rows);

// Schwinger construction: eigenvector basis of the cyclic-shift operator of
// an orthonormal basis; mutually unbiased against the input.
std::vector<CVec> mub_schwinger(const std::vector<CVec>& basis);

// exp((i/2)(x1 s1 + x2 s2 + x3 s3)) in closed form; unitary, det 1.
ComplexMatrix su2_exp(double x1, double x2, double x3);

ComplexMatrix pauli(int k);  // k = 1,2,3

struct SchmidtDecomposition {
  std::vector<double> coefficients;  // descending, sum of squares 1
  std::vector<CVec> left, right;
};
SchmidtDecomposition schmidt_decompose(const CVec& psi, int n, int m);

// T^bs(omega, alpha, beta, phi) and T^MZ(omega, alpha, beta, phi).
ComplexMatrix interferometer_unitary(const std::string& kind, double omega,
                                     double alpha, double beta, double phi);
// T^MZ by the 6-factor matrix product route.
ComplexMatrix mz_product(double omega, double alpha, double beta, double phi);
// Reduced one-parameter-pair family T(omega, phi).
ComplexMatrix beam_splitter_reduced(double omega, double phi);
ComplexMatrix gate_identity();
ComplexMatrix gate_not();
ComplexMatrix gate_sqrt_identity();
ComplexMatrix gate_sqrt_not();

// sigma(theta, phi) = x.sigma for the unit direction (theta, phi).
ComplexMatrix spin_direction(double theta, double phi);

// Singlet expectation: closed form and the 4x4 trace route.
double singlet_correlation(double theta1, double phi1, double theta2,
                           double phi2);
double singlet_correlation_trace(double theta1, double phi1, double theta2,
                                 double phi2);

struct KSInstance {
  std::vector<std::array<int, 4>> vectors;   // 18 four-component vectors
  std::vector<std::array<int, 4>> contexts;  // 9 index quadruples
  void validate() const;
  static KSInstance cabello18();
};

struct KSResult {
  bool colorable;
  std::vector<int> assignment;  // per vector, when colorable
  std::string certificate;      // parity argument, when uncolorable
};
KSResult ks_colorability(const KSInstance& instance);

// Left-translation permutation matrices of a finite group given by its
// Cayley table (entries 0..n-1); throws naming the violated axiom.
std::vector<ComplexMatrix> cayley_representation(
    const std::vector<std::vector<int>>& table);

using SurfaceMap = std::function<std::array<double, 3>(double, double)>;

// Gram matrix of the tangent vectors of an embedded surface.
std::array<std::array<double, 2>, 2> induced_metric(const SurfaceMap& map,
                                                    double u, double v);

// Planar rotation R(theta) = [[cos, sin], [-sin, cos]].
ComplexMatrix so2_rotation(double theta);

int levi_civita(int i, int j, int k);  // indices 1..3

// Gram-Schmidt on vectors, unnormalized (projections subtracted only).
std::vector<CVec> gram_schmidt_vectors(const std::vector<CVec>& xs);

// Basis-change matrix sum_i |f_i><e_i|.
ComplexMatrix basis_change(const std::vector<CVec>& from_e,
                           const std::vector<CVec>& to_f);

// Rows of an orthonormal basis stacked into a unitary.
ComplexMatrix unitary_from_basis(const std::vector<CVec>& basis);

}  // namespace physkit::finhilb

#endif
