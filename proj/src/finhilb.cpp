#include "physkit/finhilb.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "physkit/quadrature.hpp"

namespace physkit::finhilb {

ComplexMatrix::ComplexMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, cplx(0)) {
  if (rows <= 0 || cols <= 0)
    throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<CVec>& rows) {
  if (rows.empty()) throw std::invalid_argument("from_rows: empty");
  ComplexMatrix m(static_cast<int>(rows.size()),
                  static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows_; ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols_)
      throw std::invalid_argument("from_rows: ragged rows");
    for (int j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ComplexMatrix ComplexMatrix::diag(const CVec& d) {
  ComplexMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::column(const CVec& v) {
  ComplexMatrix m(static_cast<int>(v.size()), 1);
  for (size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix +: shape mismatch");
  ComplexMatrix r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix -: shape mismatch");
  ComplexMatrix r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix *: shape mismatch");
  ComplexMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      cplx a = (*this)(i, k);
      if (a == cplx(0)) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

ComplexMatrix ComplexMatrix::operator*(cplx s) const {
  ComplexMatrix r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
  return r;
}

CVec ComplexMatrix::operator*(const CVec& v) const {
  if (cols_ != static_cast<int>(v.size()))
    throw std::invalid_argument("matrix * vector: shape mismatch");
  CVec r(rows_, cplx(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

cplx ComplexMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace: square only");
  cplx t = 0.0;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

namespace {

cplx det_cofactor(const ComplexMatrix& m) {
  int n = m.rows();
  if (n == 1) return m(0, 0);
  cplx d = 0.0;
  for (int j = 0; j < n; ++j) {
    ComplexMatrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    cplx sign = (j % 2 == 0) ? 1.0 : -1.0;
    d += sign * m(0, j) * det_cofactor(minor);
  }
  return d;
}

// Pivoted LU in place; returns det (0 on singularity).
cplx det_lu(ComplexMatrix a) {
  int n = a.rows();
  cplx d = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
    if (std::abs(a(piv, k)) < 1e-300) return 0.0;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(k, j));
      d = -d;
    }
    d *= a(k, k);
    for (int i = k + 1; i < n; ++i) {
      cplx f = a(i, k) / a(k, k);
      for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return d;
}

}  // namespace

cplx ComplexMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det: square only");
  if (rows_ <= 4) return det_cofactor(*this);
  return det_lu(*this);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& v : e_) m = std::max(m, std::abs(v));
  return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (rows_ != cols_) return false;
  double scale = std::max(1.0, max_abs());
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol * scale)
        return false;
  return true;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return r;
}

CVec kron_vec(const CVec& a, const CVec& b) {
  CVec r(a.size() * b.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i * b.size() + j] = a[i] * b[j];
  return r;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

cplx inner(const CVec& a, const CVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner: size mismatch");
  cplx s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(const CVec& v) { return std::sqrt(std::abs(inner(v, v))); }

void jacobi_symmetric(std::vector<std::vector<double>>& a,
                      std::vector<double>& eigenvalues,
                      std::vector<std::vector<double>>& vectors) {
  const int n = static_cast<int>(a.size());
  vectors.assign(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) vectors[i][i] = 1.0;
  double scale = 1e-300;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(a[i][j]));

  for (int sweep = 0; sweep < 30; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (std::sqrt(off) <= 1e-13 * scale) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) <= 1e-300) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          double vkp = vectors[k][p], vkq = vectors[k][q];
          vectors[k][p] = c * vkp - s * vkq;
          vectors[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  eigenvalues.resize(n);
  for (int i = 0; i < n; ++i) eigenvalues[i] = a[i][i];
  // Sort ascending, carrying the vector columns.
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](int i, int j) { return eigenvalues[i] < eigenvalues[j]; });
  std::vector<double> ev(n);
  std::vector<std::vector<double>> vv(n, std::vector<double>(n));
  for (int c = 0; c < n; ++c) {
    ev[c] = eigenvalues[idx[c]];
    for (int r = 0; r < n; ++r) vv[r][c] = vectors[r][idx[c]];
  }
  eigenvalues = std::move(ev);
  vectors = std::move(vv);
}

namespace {

void fix_phase(CVec& v) {
  for (const cplx& c : v) {
    if (std::abs(c) > 1e-9) {
      cplx ph = c / std::abs(c);
      for (cplx& x : v) x /= ph;
      return;
    }
  }
}

}  // namespace

EigenSystem hermitian_eigen(const ComplexMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("hermitian_eigen: square matrices only");
  if (!m.is_hermitian())
    throw std::invalid_argument("hermitian_eigen: matrix is not Hermitian");
  const int n = m.rows();

  // Real-symmetric embedding [[A, -B], [B, A]] of A + iB.
  std::vector<std::vector<double>> emb(2 * n, std::vector<double>(2 * n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      emb[i][j] = m(i, j).real();
      emb[i][j + n] = -m(i, j).imag();
      emb[i + n][j] = m(i, j).imag();
      emb[i + n][j + n] = m(i, j).real();
    }
  std::vector<double> ev;
  std::vector<std::vector<double>> vec;
  jacobi_symmetric(emb, ev, vec);

  // Cluster the 2n embedded eigenvalues (each complex eigenvalue twice).
  EigenSystem out;
  double lscale = 0.0;
  for (double l : ev) lscale = std::max(lscale, std::abs(l));
  int i = 0;
  while (i < 2 * n) {
    int j = i;
    while (j + 1 < 2 * n &&
           std::abs(ev[j + 1] - ev[i]) <= 1e-8 * (1.0 + std::abs(ev[i])))
      ++j;
    // Real projector of the cluster, then the complex blocks read off.
    std::vector<std::vector<double>> P(2 * n, std::vector<double>(2 * n, 0.0));
    for (int c = i; c <= j; ++c)
      for (int r = 0; r < 2 * n; ++r)
        for (int s = 0; s < 2 * n; ++s) P[r][s] += vec[r][c] * vec[s][c];
    ComplexMatrix proj(n, n);
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s) proj(r, s) = cplx(P[r][s], P[r + n][s]);
    // Re-symmetrize.
    proj = (proj + proj.adjoint()) * cplx(0.5);

    double lambda = 0.0;
    for (int c = i; c <= j; ++c) lambda += ev[c];
    lambda /= (j - i + 1);
    int mult = (j - i + 1) / 2;
    out.eigenvalues.push_back(lambda);
    out.projectors.push_back(proj);
    out.multiplicities.push_back(mult);

    // Orthonormal complex eigenvectors of the cluster from the real ones.
    std::vector<CVec> got;
    for (int c = i; c <= j && static_cast<int>(got.size()) < mult; ++c) {
      CVec v(n);
      for (int r = 0; r < n; ++r) v[r] = cplx(vec[r][c], vec[r + n][c]);
      for (const CVec& u : got) {
        cplx ip = inner(u, v);
        for (int r = 0; r < n; ++r) v[r] -= ip * u[r];
      }
      double nv = norm(v);
      if (nv < 1e-6) continue;  // duplicate of an earlier embedded vector
      for (int r = 0; r < n; ++r) v[r] /= nv;
      got.push_back(v);
    }
    for (CVec& v : got) {
      fix_phase(v);
      out.eigenvectors.push_back(v);
      out.eigenvalue_per_vector.push_back(lambda);
    }
    i = j + 1;
  }
  return out;
}

ComplexMatrix spectral_projector_poly(const ComplexMatrix& m,
                                      const std::vector<double>& eigenvalues,
                                      int i) {
  const int k = static_cast<int>(eigenvalues.size());
  if (i < 0 || i >= k)
    throw std::invalid_argument("spectral_projector_poly: index out of range");
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (std::abs(eigenvalues[a] - eigenvalues[b]) <
          1e-10 * (1.0 + std::abs(eigenvalues[a])))
        throw std::invalid_argument(
            "spectral_projector_poly: repeated eigenvalue in the list");
  ComplexMatrix p = ComplexMatrix::identity(m.rows());
  for (int j = 0; j < k; ++j) {
    if (j == i) continue;
    ComplexMatrix term = m - ComplexMatrix::identity(m.rows()) *
                                 cplx(eigenvalues[j]);
    p = p * (term * cplx(1.0 / (eigenvalues[i] - eigenvalues[j])));
  }
  return p;
}

ComplexMatrix projector(const CVec& v) {
  double n2 = std::abs(inner(v, v));
  if (n2 < 1e-300) throw std::domain_error("projector: zero vector");
  ComplexMatrix p(static_cast<int>(v.size()), static_cast<int>(v.size()));
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      p(static_cast<int>(i), static_cast<int>(j)) =
          v[i] * std::conj(v[j]) / n2;
  return p;
}

std::vector<CVec> dual_basis(const ComplexMatrix& basis_rows) {
  const int n = basis_rows.rows();
  if (basis_rows.cols() != n)
    throw std::invalid_argument("dual_basis: square matrix of rows required");
  if (std::abs(basis_rows.det()) < 1e-12)
    throw std::domain_error("dual_basis: singular basis");
  // Solve B X = I by Gauss-Jordan; dual vectors are the columns of X.
  ComplexMatrix a = basis_rows;
  ComplexMatrix x = ComplexMatrix::identity(n);
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
    if (std::abs(a(piv, k)) < 1e-14)
      throw std::domain_error("dual_basis: singular basis");
    if (piv != k)
      for (int j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(k, j));
        std::swap(x(piv, j), x(k, j));
      }
    cplx d = a(k, k);
    for (int j = 0; j < n; ++j) {
      a(k, j) /= d;
      x(k, j) /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      cplx f = a(i, k);
      if (f == cplx(0)) continue;
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        x(i, j) -= f * x(k, j);
      }
    }
  }
  std::vector<CVec> duals(n, CVec(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) duals[j][i] = x(i, j);
  return duals;
}

std::vector<CVec> mub_schwinger(const std::vector<CVec>& basis) {
  const int n = static_cast<int>(basis.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cplx ip = inner(basis[i], basis[j]);
      double want = (i == j) ? 1.0 : 0.0;
      if (std::abs(ip - want) > 1e-10)
        throw std::invalid_argument("mub_schwinger: basis not orthonormal");
    }
  // Shift operator U = sum_i |b_{i+1}><b_i|.
  ComplexMatrix u(n, n);
  for (int i = 0; i < n; ++i) {
    const CVec& from = basis[i];
    const CVec& to = basis[(i + 1) % n];
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) u(r, c) += to[r] * std::conj(from[c]);
  }
  // Eigenvectors of the shift in the given basis are the Fourier vectors
  // v_k = n^{-1/2} sum_j w^{jk} b_j; verified against U below.
  std::vector<CVec> out;
  for (int k = 0; k < n; ++k) {
    CVec v(basis[0].size(), cplx(0));
    for (int j = 0; j < n; ++j) {
      cplx w = std::exp(cplx(0.0, 2.0 * M_PI * j * k / n));
      for (size_t r = 0; r < v.size(); ++r) v[r] += w * basis[j][r];
    }
    for (cplx& c : v) c /= std::sqrt(double(n));
    CVec uv = u * v;
    cplx lambda = inner(v, uv);
    double resid = 0.0;
    for (size_t r = 0; r < v.size(); ++r)
      resid = std::max(resid, std::abs(uv[r] - lambda * v[r]));
    if (resid > 1e-10)
      throw std::runtime_error("mub_schwinger: eigenvector check failed");
    fix_phase(v);
    out.push_back(v);
  }
  return out;
}

ComplexMatrix pauli(int k) {
  ComplexMatrix s(2, 2);
  switch (k) {
    case 1:
      s(0, 1) = 1.0;
      s(1, 0) = 1.0;
      break;
    case 2:
      s(0, 1) = cplx(0.0, -1.0);
      s(1, 0) = cplx(0.0, 1.0);
      break;
    case 3:
      s(0, 0) = 1.0;
      s(1, 1) = -1.0;
      break;
    default:
      throw std::invalid_argument("pauli: k in {1,2,3}");
  }
  return s;
}

ComplexMatrix su2_exp(double x1, double x2, double x3) {
  double r = std::sqrt(x1 * x1 + x2 * x2 + x3 * x3);
  ComplexMatrix m = ComplexMatrix::identity(2) * cplx(std::cos(0.5 * r));
  if (r > 0.0) {
    cplx f = cplx(0.0, std::sin(0.5 * r) / r);
    ComplexMatrix dir =
        pauli(1) * cplx(x1) + pauli(2) * cplx(x2) + pauli(3) * cplx(x3);
    m = m + dir * f;
  }
  return m;
}

SchmidtDecomposition schmidt_decompose(const CVec& psi, int n, int m) {
  if (static_cast<int>(psi.size()) != n * m)
    throw std::invalid_argument("schmidt_decompose: dimension mismatch");
  double nn = norm(psi);
  if (std::abs(nn - 1.0) > 1e-9)
    throw std::invalid_argument("schmidt_decompose: state must be normalized");
  // psi = sum a_ij |i>|j>: eigen of A^dagger A gives the right factors.
  ComplexMatrix a(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) a(i, j) = psi[i * m + j];
  ComplexMatrix ata = a.adjoint() * a;
  EigenSystem es = hermitian_eigen(ata);

  SchmidtDecomposition out;
  struct Item {
    double sigma;
    CVec w;
  };
  std::vector<Item> items;
  for (size_t t = 0; t < es.eigenvectors.size(); ++t) {
    double lam = std::max(0.0, es.eigenvalue_per_vector[t]);
    items.push_back({std::sqrt(lam), es.eigenvectors[t]});
  }
  std::sort(items.begin(), items.end(),
            [](const Item& x, const Item& y) { return x.sigma > y.sigma; });
  for (const Item& it : items) {
    out.coefficients.push_back(it.sigma);
    CVec right(m);
    for (int j = 0; j < m; ++j) right[j] = std::conj(it.w[j]);
    CVec left(n, cplx(0));
    if (it.sigma > 1e-12) {
      CVec aw = a * it.w;
      for (int i = 0; i < n; ++i) left[i] = aw[i] / it.sigma;
    }
    out.left.push_back(left);
    out.right.push_back(right);
  }
  return out;
}

ComplexMatrix interferometer_unitary(const std::string& kind, double omega,
                                     double alpha, double beta, double phi) {
  ComplexMatrix t(2, 2);
  cplx I(0.0, 1.0);
  if (kind == "bs") {
    t(0, 0) = I * std::exp(I * (alpha + beta + phi)) * std::sin(omega);
    t(0, 1) = std::exp(I * (beta + phi)) * std::cos(omega);
    t(1, 0) = std::exp(I * (alpha + beta)) * std::cos(omega);
    t(1, 1) = I * std::exp(I * beta) * std::sin(omega);
    return t;
  }
  if (kind == "mz") {
    cplx pre = I * std::exp(I * (beta + 0.5 * omega));
    t(0, 0) = -std::exp(I * (alpha + phi)) * std::sin(0.5 * omega);
    t(0, 1) = std::exp(I * phi) * std::cos(0.5 * omega);
    t(1, 0) = std::exp(I * alpha) * std::cos(0.5 * omega);
    t(1, 1) = std::sin(0.5 * omega);
    return t * pre;
  }
  throw std::invalid_argument("interferometer_unitary: kind is 'bs' or 'mz'");
}

ComplexMatrix mz_product(double omega, double alpha, double beta, double phi) {
  cplx I(0.0, 1.0);
  ComplexMatrix p4(2, 2), s(2, 2), p3(2, 2), p1(2, 2), p2(2, 2);
  p4(0, 0) = std::exp(I * phi);
  p4(1, 1) = 1.0;
  s(0, 0) = I / std::sqrt(2.0);
  s(0, 1) = 1.0 / std::sqrt(2.0);
  s(1, 0) = 1.0 / std::sqrt(2.0);
  s(1, 1) = I / std::sqrt(2.0);
  p3(0, 0) = std::exp(I * omega);
  p3(1, 1) = 1.0;
  p1(0, 0) = std::exp(I * (alpha + beta));
  p1(1, 1) = 1.0;
  p2(0, 0) = 1.0;
  p2(1, 1) = std::exp(I * beta);
  return p4 * s * p3 * s * p1 * p2;
}

ComplexMatrix beam_splitter_reduced(double omega, double phi) {
  return interferometer_unitary("bs", omega, -0.5 * M_PI, 0.5 * M_PI - phi,
                                phi - 0.5 * M_PI);
}

ComplexMatrix gate_identity() { return beam_splitter_reduced(0.5 * M_PI, M_PI); }
ComplexMatrix gate_not() { return beam_splitter_reduced(0.0, 0.0); }
ComplexMatrix gate_sqrt_identity() { return beam_splitter_reduced(0.25 * M_PI, 0.0); }
// sqrt-NOT = (1/2)[[1+i, 1-i], [1-i, 1+i]] through the four-parameter
// beam-splitter form.
ComplexMatrix gate_sqrt_not() {
  return interferometer_unitary("bs", 0.25 * M_PI, 0.0, -0.25 * M_PI, 0.0);
}

ComplexMatrix spin_direction(double theta, double phi) {
  ComplexMatrix s(2, 2);
  s(0, 0) = std::cos(theta);
  s(0, 1) = std::exp(cplx(0.0, -phi)) * std::sin(theta);
  s(1, 0) = std::exp(cplx(0.0, phi)) * std::sin(theta);
  s(1, 1) = -std::cos(theta);
  return s;
}

double singlet_correlation(double theta1, double phi1, double theta2,
                           double phi2) {
  return -(std::cos(theta1) * std::cos(theta2) +
           std::cos(phi1 - phi2) * std::sin(theta1) * std::sin(theta2));
}

double singlet_correlation_trace(double theta1, double phi1, double theta2,
                                 double phi2) {
  CVec psi = {0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0};
  ComplexMatrix rho = projector(psi);
  ComplexMatrix obs =
      kron(spin_direction(theta1, phi1), spin_direction(theta2, phi2));
  return (rho * obs).trace().real();
}

void KSInstance::validate() const {
  std::vector<int> uses(vectors.size(), 0);
  for (const auto& ctx : contexts) {
    for (int a = 0; a < 4; ++a) {
      if (ctx[a] < 0 || ctx[a] >= static_cast<int>(vectors.size()))
        throw std::invalid_argument("KSInstance: context index out of range");
      ++uses[ctx[a]];
      for (int b = a + 1; b < 4; ++b) {
        int dot = 0;
        for (int k = 0; k < 4; ++k)
          dot += vectors[ctx[a]][k] * vectors[ctx[b]][k];
        if (dot != 0)
          throw std::invalid_argument(
              "KSInstance: context is not an orthogonal quadruple");
      }
    }
  }
  for (int u : uses)
    if (u != 2)
      throw std::invalid_argument(
          "KSInstance: every vector must appear in exactly two contexts");
}

KSInstance KSInstance::cabello18() {
  KSInstance k;
  k.vectors = {
      {0, 0, 1, -1},   // A
      {1, -1, 0, 0},   // B
      {1, 1, -1, -1},  // C
      {1, 1, 1, 1},    // D
      {1, -1, 1, -1},  // E
      {1, 0, -1, 0},   // F
      {0, 1, 0, -1},   // G
      {1, 0, 1, 0},    // H
      {1, 1, -1, 1},   // I
      {-1, 1, 1, 1},   // J
      {1, 1, 1, -1},   // K
      {1, 0, 0, 1},    // L
      {0, 1, -1, 0},   // M
      {0, 1, 1, 0},    // N
      {0, 0, 0, 1},    // O
      {1, 0, 0, 0},    // P
      {0, 1, 0, 0},    // Q
      {0, 0, 1, 1},    // R
  };
  auto ix = [](char c) { return c - 'A'; };
  k.contexts = {
      {ix('A'), ix('B'), ix('C'), ix('D')},  // a
      {ix('D'), ix('E'), ix('F'), ix('G')},  // b
      {ix('G'), ix('H'), ix('I'), ix('J')},  // c
      {ix('J'), ix('K'), ix('L'), ix('M')},  // d
      {ix('M'), ix('N'), ix('O'), ix('P')},  // e
      {ix('P'), ix('Q'), ix('R'), ix('A')},  // f
      {ix('B'), ix('I'), ix('K'), ix('R')},  // g
      {ix('C'), ix('E'), ix('L'), ix('N')},  // h
      {ix('F'), ix('H'), ix('O'), ix('Q')},  // i
  };
  return k;
}

namespace {

bool ks_dfs(const KSInstance& inst,
            const std::vector<std::vector<int>>& contexts_of, size_t ctx,
            std::vector<int>& val) {
  if (ctx == inst.contexts.size()) return true;
  const auto& c = inst.contexts[ctx];
  // Exactly one member set to 1, the other three 0.
  for (int pick = 0; pick < 4; ++pick) {
    bool ok = true;
    std::vector<std::pair<int, int>> changed;
    for (int a = 0; a < 4 && ok; ++a) {
      int want = (a == pick) ? 1 : 0;
      int v = c[a];
      if (val[v] == -1) {
        val[v] = want;
        changed.emplace_back(v, -1);
      } else if (val[v] != want) {
        ok = false;
      }
    }
    if (ok && ks_dfs(inst, contexts_of, ctx + 1, val)) return true;
    for (auto& [v, old] : changed) val[v] = old;
  }
  return false;
}

}  // namespace

KSResult ks_colorability(const KSInstance& instance) {
  instance.validate();
  std::vector<std::vector<int>> contexts_of(instance.vectors.size());
  for (size_t c = 0; c < instance.contexts.size(); ++c)
    for (int a = 0; a < 4; ++a)
      contexts_of[instance.contexts[c][a]].push_back(static_cast<int>(c));
  std::vector<int> val(instance.vectors.size(), -1);
  KSResult out;
  if (ks_dfs(instance, contexts_of, 0, val)) {
    out.colorable = true;
    out.assignment = val;
    return out;
  }
  out.colorable = false;
  out.certificate =
      "parity: each vector lies in exactly two contexts, so summing the "
      "per-context truth counts double-counts every assigned 1 (even total); "
      "but " +
      std::to_string(instance.contexts.size()) +
      " contexts with exactly one true proposition each require an odd total";
  return out;
}

std::vector<ComplexMatrix> cayley_representation(
    const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw std::invalid_argument("cayley_representation: empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("cayley_representation: table not square");
    for (int v : row)
      if (v < 0 || v >= n)
        throw std::invalid_argument(
            "cayley_representation: closure violated (entry out of range)");
  }
  // identity
  int e = -1;
  for (int g = 0; g < n; ++g) {
    bool ok = true;
    for (int h = 0; h < n; ++h)
      if (table[g][h] != h || table[h][g] != h) ok = false;
    if (ok) {
      e = g;
      break;
    }
  }
  if (e < 0)
    throw std::invalid_argument(
        "cayley_representation: no identity element in the table");
  for (int g = 0; g < n; ++g) {
    bool has_inv = false;
    for (int h = 0; h < n; ++h)
      if (table[g][h] == e && table[h][g] == e) has_inv = true;
    if (!has_inv)
      throw std::invalid_argument(
          "cayley_representation: missing inverse for element " +
          std::to_string(g));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw std::invalid_argument(
              "cayley_representation: associativity violated");

  std::vector<ComplexMatrix> reps;
  for (int g = 0; g < n; ++g) {
    ComplexMatrix p(n, n);
    for (int h = 0; h < n; ++h) p(table[g][h], h) = 1.0;
    reps.push_back(p);
  }
  return reps;
}

std::array<std::array<double, 2>, 2> induced_metric(const SurfaceMap& map,
                                                    double u, double v) {
  auto partial = [&](int which, int comp) {
    auto f = [&](double s) {
      return which == 0 ? map(s, v)[comp] : map(u, s)[comp];
    };
    return quad::derivative(f, which == 0 ? u : v, 1, 1e-5);
  };
  double ju[3], jv[3];
  for (int c = 0; c < 3; ++c) {
    ju[c] = partial(0, c);
    jv[c] = partial(1, c);
  }
  auto dot = [](const double* a, const double* b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
  };
  std::array<std::array<double, 2>, 2> g{};
  g[0][0] = dot(ju, ju);
  g[0][1] = g[1][0] = dot(ju, jv);
  g[1][1] = dot(jv, jv);
  double det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  if (!(det > 1e-12 * std::max(1.0, g[0][0] * g[1][1])))
    throw std::domain_error("induced_metric: degenerate parameterization");
  return g;
}

ComplexMatrix so2_rotation(double theta) {
  ComplexMatrix r(2, 2);
  r(0, 0) = std::cos(theta);
  r(0, 1) = std::sin(theta);
  r(1, 0) = -std::sin(theta);
  r(1, 1) = std::cos(theta);
  return r;
}

int levi_civita(int i, int j, int k) {
  if (i < 1 || i > 3 || j < 1 || j > 3 || k < 1 || k > 3)
    throw std::invalid_argument("levi_civita: indices 1..3");
  if (i == j || j == k || i == k) return 0;
  // parity of the permutation (i j k) of (1 2 3)
  int swaps = 0;
  int a[3] = {i, j, k};
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2 - p; ++q)
      if (a[q] > a[q + 1]) {
        std::swap(a[q], a[q + 1]);
        ++swaps;
      }
  return swaps % 2 == 0 ? 1 : -1;
}

std::vector<CVec> gram_schmidt_vectors(const std::vector<CVec>& xs) {
  std::vector<CVec> ys;
  for (const CVec& x : xs) {
    CVec y = x;
    for (const CVec& prev : ys) {
      cplx c = inner(prev, x) / inner(prev, prev);
      for (size_t i = 0; i < y.size(); ++i) y[i] -= c * prev[i];
    }
    if (norm(y) < 1e-12)
      throw std::domain_error("gram_schmidt_vectors: dependent input");
    ys.push_back(y);
  }
  return ys;
}

ComplexMatrix basis_change(const std::vector<CVec>& from_e,
                           const std::vector<CVec>& to_f) {
  if (from_e.size() != to_f.size())
    throw std::invalid_argument("basis_change: size mismatch");
  const int n = static_cast<int>(from_e[0].size());
  ComplexMatrix u(n, n);
  for (size_t i = 0; i < from_e.size(); ++i)
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        u(r, c) += to_f[i][r] * std::conj(from_e[i][c]);
  return u;
}

ComplexMatrix unitary_from_basis(const std::vector<CVec>& basis) {
  return ComplexMatrix::from_rows(basis);
}

}  // namespace physkit::finhilb
