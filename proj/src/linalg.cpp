#include "blochsep/linalg.hpp"

#include <sstream>

namespace blochsep {

void SystemShape::check() const {
  if (dims.empty())
    throw std::invalid_argument("SystemShape: need at least one party");
  for (int d : dims)
    if (d < 2)
      throw std::invalid_argument("SystemShape: local dimensions must be >= 2");
}

std::string SystemShape::str() const {
  std::ostringstream os;
  os << '[';
  for (size_t k = 0; k < dims.size(); ++k) {
    if (k) os << ',';
    os << dims[k];
  }
  os << ']';
  return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix kron(const std::vector<Matrix>& factors) {
  if (factors.empty())
    throw std::invalid_argument("kron: empty factor list");
  Matrix out = factors.front();
  for (size_t k = 1; k < factors.size(); ++k) out = kron(out, factors[k]);
  return out;
}

Matrix identity(long n) { return Matrix::Identity(n, n); }

Matrix maximally_mixed(const SystemShape& shape) {
  long n = shape.total();
  return Matrix::Identity(n, n) / static_cast<double>(n);
}

std::optional<DensityError> density_error(const Matrix& mat,
                                          const SystemShape& shape,
                                          double tol) {
  long n = shape.total();
  if (mat.rows() != n || mat.cols() != n) {
    std::ostringstream os;
    os << "matrix is " << mat.rows() << "x" << mat.cols()
       << " but shape " << shape.str() << " needs " << n << "x" << n;
    return DensityError{DensityViolation::ShapeMismatch,
                        static_cast<double>(std::abs(mat.rows() - n)), os.str()};
  }
  double herm = (mat - mat.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol) {
    std::ostringstream os;
    os << "not Hermitian: max |M - M^dag| = " << herm;
    return DensityError{DensityViolation::NonHermitian, herm, os.str()};
  }
  double tr_dev = std::abs(mat.trace() - Cplx(1.0, 0.0));
  if (tr_dev > tol) {
    std::ostringstream os;
    os << "trace deviates from 1 by " << tr_dev;
    return DensityError{DensityViolation::TraceNotOne, tr_dev, os.str()};
  }
  // Positivity judged on the Hermitian part only; by this point the
  // anti-Hermitian residue is below tol.
  double lo = min_eigenvalue(mat);
  if (lo < -tol) {
    std::ostringstream os;
    os << "not positive semidefinite: min eigenvalue = " << lo;
    return DensityError{DensityViolation::NotPositiveSemidefinite, -lo, os.str()};
  }
  return std::nullopt;
}

DensityMatrix validate_density(const Matrix& mat, const SystemShape& shape,
                               double tol) {
  if (auto err = density_error(mat, shape, tol))
    throw DensityValidationError(*err);
  return DensityMatrix{shape, mat, tol};
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& mat) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(mat, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericalInconsistency("hermitian eigensolve did not converge");
  return solver.eigenvalues();
}

double min_eigenvalue(const Matrix& mat) {
  return hermitian_eigenvalues(mat).minCoeff();
}

namespace {

// Decompose a composite index into per-party digits, most significant first.
void digits_of(long x, const std::vector<int>& dims, std::vector<int>& out) {
  for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
    out[k] = static_cast<int>(x % dims[k]);
    x /= dims[k];
  }
}

}  // namespace

Matrix partial_transpose(const Matrix& mat, const SystemShape& shape,
                         const std::vector<int>& parties) {
  long n = shape.total();
  if (mat.rows() != n || mat.cols() != n)
    throw std::invalid_argument("partial_transpose: matrix/shape mismatch");
  int N = shape.parties();
  std::vector<bool> flip(N, false);
  for (int p : parties) {
    if (p < 1 || p > N)
      throw std::invalid_argument("partial_transpose: party index out of range");
    flip[p - 1] = true;
  }
  Matrix out(n, n);
  std::vector<int> ad(N), bd(N);
  for (long a = 0; a < n; ++a) {
    digits_of(a, shape.dims, ad);
    for (long b = 0; b < n; ++b) {
      digits_of(b, shape.dims, bd);
      long ra = 0, rb = 0;
      for (int k = 0; k < N; ++k) {
        int ak = flip[k] ? bd[k] : ad[k];
        int bk = flip[k] ? ad[k] : bd[k];
        ra = ra * shape.dims[k] + ak;
        rb = rb * shape.dims[k] + bk;
      }
      out(ra, rb) = mat(a, b);
    }
  }
  return out;
}

Matrix partial_transpose(const DensityMatrix& rho,
                         const std::vector<int>& parties) {
  return partial_transpose(rho.mat, rho.shape, parties);
}

}  // namespace blochsep
