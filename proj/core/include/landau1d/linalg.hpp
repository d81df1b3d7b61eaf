#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace landau1d {

// ---------------------------------------------------------------------------
// Symmetric tridiagonal kernels.  Convention: diag d[0..n), subdiag e[0..n-1)
// with e[i] coupling rows i and i+1.
// ---------------------------------------------------------------------------

/// Number of eigenvalues strictly below `x` (Sturm sequence count).
int sturm_count(std::span<const double> d, std::span<const double> e, double x);

/// The k smallest eigenvalues by certified bisection, each to abs_tol.
std::vector<double> tridiag_smallest(std::span<const double> d,
                                     std::span<const double> e, int k,
                                     double abs_tol);

/// Eigenvector of the tridiagonal matrix for an eigenvalue estimate lambda,
/// by inverse iteration with a pivoted tridiagonal factorization.  Returns a
/// unit vector.
std::vector<double> tridiag_eigenvector(std::span<const double> d,
                                        std::span<const double> e,
                                        double lambda);

/// Implicit-QL sweep (tql2 style).  On return d holds the eigenvalues in
/// ascending order; e is destroyed.  If `row` is non-null it must have size n
/// and is transformed by the accumulated rotations: starting from the first
/// unit row vector this yields the first components of every eigenvector,
/// which is exactly what Golub-Welsch quadrature weights need.
void tql2_row(std::vector<double>& d, std::vector<double>& e,
              std::vector<double>* row);

// ---------------------------------------------------------------------------
// Symmetric banded kernels (half-bandwidth bw; bw = 1 tridiagonal, bw = 2
// pentadiagonal).  Band storage: a[j*(bw+1) + r] = A(j+r, j), r = 0..bw.
// ---------------------------------------------------------------------------

struct SymmetricBanded {
  int n = 0;
  int bw = 1;
  std::vector<double> a;

  double& at(int j, int r) { return a[static_cast<std::size_t>(j) * (bw + 1) + r]; }
  double at(int j, int r) const { return a[static_cast<std::size_t>(j) * (bw + 1) + r]; }
  static SymmetricBanded zeros(int n, int bw);
};

/// Number of eigenvalues strictly below `sigma`, via the inertia of the
/// LDL^T factorization of A - sigma I (zero pivots perturbed).
int banded_inertia(const SymmetricBanded& A, double sigma);

/// LU factorization of (A - sigma I) with partial pivoting, band solver.
class BandedLU {
 public:
  BandedLU(const SymmetricBanded& A, double sigma);
  void solve(std::span<double> x) const;  // in place
  int n() const { return n_; }

 private:
  int n_;
  int bw_;
  int width_;                 // 3*bw+1 working diagonals
  std::vector<double> lu_;    // row-major band rows
  std::vector<int> pivot_;
};

/// k smallest eigenpairs of a symmetric banded matrix: certified bisection on
/// the inertia for values, inverse iteration for vectors.
struct BandedEigenResult {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
};
BandedEigenResult banded_smallest_eigenpairs(const SymmetricBanded& A, int k,
                                             double abs_tol, bool want_vectors);

// ---------------------------------------------------------------------------
// Small dense symmetric eigensolver (cyclic Jacobi) for Rayleigh-Ritz blocks.
// ---------------------------------------------------------------------------

/// a is k-by-k row-major, destroyed.  Eigenvalues ascending; vectors[i] is
/// the i-th eigenvector (column) if want_vectors.
void jacobi_symmetric(std::vector<double>& a, int k,
                      std::vector<double>& eigenvalues,
                      std::vector<double>* eigenvectors);

// ---------------------------------------------------------------------------
// DST-I plans (FFTW-backed) for the kinetic preconditioner.
// ---------------------------------------------------------------------------

/// One-dimensional DST-I of length n, unnormalized (apply twice = (n+1)/2 I).
class Dst1Plan {
 public:
  explicit Dst1Plan(int n);
  ~Dst1Plan();
  Dst1Plan(const Dst1Plan&) = delete;
  Dst1Plan& operator=(const Dst1Plan&) = delete;
  void apply(double* data) const;
  int n() const { return n_; }

 private:
  int n_;
  void* plan_;
  double* buffer_;
};

/// Two-dimensional DST-I on an n-by-n array (row-major), unnormalized.
class Dst2Plan {
 public:
  explicit Dst2Plan(int n);
  ~Dst2Plan();
  Dst2Plan(const Dst2Plan&) = delete;
  Dst2Plan& operator=(const Dst2Plan&) = delete;
  void apply(double* data) const;  // in place, size n*n
  int n() const { return n_; }

 private:
  int n_;
  void* plan_;
};

// ---------------------------------------------------------------------------
// Preconditioned conjugate gradient.
// ---------------------------------------------------------------------------

struct PcgResult {
  int iterations = 0;
  double rel_residual = 0.0;
  bool converged = false;
  bool indefinite = false;  // operator detected non-SPD (p'Ap <= 0)
};

using ApplyFn = std::function<void(std::span<const double>, std::span<double>)>;

PcgResult pcg(const ApplyFn& apply_A, const ApplyFn& apply_Pinv,
              std::span<const double> b, std::span<double> x, double rel_tol,
              int max_iterations);

// Deterministic sequential BLAS-1 helpers.
double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
void scal(double alpha, std::span<double> x);

}  // namespace landau1d
