#ifndef BLOCHSEP_LINALG_HPP
#define BLOCHSEP_LINALG_HPP

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

// Dense complex-matrix primitives: Kronecker products, density-matrix
// validation, Hermitian eigenvalues, partial transpose. Row-major storage
// throughout; system sizes in scope (N <= 8 qubits, local dims <= 5) never
// need sparsity.

namespace blochsep {

using Cplx = std::complex<double>;
using Matrix =
    Eigen::Matrix<Cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MultiIndex = std::vector<int>;

constexpr double kDefaultValidationTol = 1e-9;
constexpr double kDecisionTol = 1e-9;   // strict-inequality verdicts
constexpr double kZeroTol = 1e-12;      // Bloch components below this snap to 0

/// Ordered local Hilbert-space dimensions n_1,...,n_N.
struct SystemShape {
  std::vector<int> dims;

  SystemShape() = default;
  SystemShape(std::initializer_list<int> d) : dims(d) { check(); }
  explicit SystemShape(std::vector<int> d) : dims(std::move(d)) { check(); }

  int parties() const { return static_cast<int>(dims.size()); }
  long total() const {
    long n = 1;
    for (int d : dims) n *= d;
    return n;
  }
  bool all_qubits() const {
    for (int d : dims)
      if (d != 2) return false;
    return !dims.empty();
  }
  bool operator==(const SystemShape& o) const { return dims == o.dims; }
  std::string str() const;

 private:
  void check() const;  // N >= 1, every n_k >= 2
};

enum class DensityViolation {
  ShapeMismatch,
  NonHermitian,
  TraceNotOne,
  NotPositiveSemidefinite,
};

struct DensityError {
  DensityViolation kind;
  double magnitude;  // size of the violated invariant
  std::string message;
};

class DensityValidationError : public std::runtime_error {
 public:
  explicit DensityValidationError(DensityError e)
      : std::runtime_error(e.message), error(std::move(e)) {}
  DensityError error;
};

class UnsupportedConvention : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class NumericalInconsistency : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Validated Hermitian, unit-trace, positive-semidefinite matrix with a
/// subsystem shape. Construct through validate_density().
struct DensityMatrix {
  SystemShape shape;
  Matrix mat;
  double validation_tol = kDefaultValidationTol;

  long dim() const { return mat.rows(); }
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron(const std::vector<Matrix>& factors);  // usage error on empty list

Matrix identity(long n);
Matrix maximally_mixed(const SystemShape& shape);

/// nullopt when `mat` is a valid density matrix for `shape` at tolerance
/// `tol`; otherwise the first violated invariant with its magnitude.
std::optional<DensityError> density_error(const Matrix& mat,
                                          const SystemShape& shape,
                                          double tol = kDefaultValidationTol);

/// Throwing form of density_error.
DensityMatrix validate_density(const Matrix& mat, const SystemShape& shape,
                               double tol = kDefaultValidationTol);

/// Eigenvalues of a Hermitian matrix, ascending.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& mat);
double min_eigenvalue(const Matrix& mat);

/// Transpose the indices of the listed subsystems (1-based party numbers).
/// Hermiticity and trace are preserved; applying twice gives the input back.
Matrix partial_transpose(const Matrix& mat, const SystemShape& shape,
                         const std::vector<int>& parties);
Matrix partial_transpose(const DensityMatrix& rho,
                         const std::vector<int>& parties);

}  // namespace blochsep

#endif
