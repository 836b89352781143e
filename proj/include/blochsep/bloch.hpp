#ifndef BLOCHSEP_BLOCH_HPP
#define BLOCHSEP_BLOCH_HPP

#include <span>

#include "blochsep/linalg.hpp"

// Generalized Bloch representations over SU(n) generator bases.
//
// A density matrix on H = H_1 x ... x H_N expands as
//   rho = (1/n) (I_n + sum_a c_a B_a),
// where each B_a is a Kronecker product of convention-scaled local basis
// elements and c_a = n Tr(rho B_a) / Tr(B_a^2). Three normalizations are
// carried:
//   Tilde  : {I_n}            u {sqrt(n(n-1)/2)   * lambda_i}
//   Check  : {I_n}            u {sqrt(n/(2(n-1))) * lambda_i}
//   Prime  : {sqrt(n-1) I_n}  u {sqrt(n(n-1)/2)   * lambda_i}
// For n = 2 every scale factor is 1 and all three coincide with the Pauli
// basis. Components are stored lexicographically over (i_1,...,i_N) with the
// all-zero index omitted (that component is identically 1).

namespace blochsep {

enum class Convention { Tilde, Check, Prime };

const char* convention_name(Convention c);
Convention convention_from_name(const std::string& name);

/// The n^2-1 SU(n) generators with Tr(l_i l_j) = 2 delta_ij, in a fixed
/// deterministic order: symmetric off-diagonal pairs (row-major), then
/// antisymmetric pairs (row-major), then diagonal generators by increasing
/// rank. Cached per n; safe for concurrent use.
const std::vector<Matrix>& generators(int n);

/// Scale applied to lambda_i (i >= 1) under a convention.
double local_scale(Convention c, int n);
/// Local basis element; index 0 is I_n (Tilde/Check) or sqrt(n-1) I_n (Prime).
Matrix local_basis_element(Convention c, int n, int i);
/// Kronecker product of local basis elements; the all-zero index is allowed.
Matrix basis_element(const SystemShape& shape, Convention c,
                     const MultiIndex& idx);

/// Tr(B_idx^2) of a product basis element (the all-zero index is allowed).
double basis_norm2(const SystemShape& shape, Convention c,
                   const MultiIndex& idx);

std::size_t bloch_component_count(const SystemShape& shape);  // prod n_k^2 - 1
std::size_t bloch_flat_index(const SystemShape& shape, const MultiIndex& idx);
MultiIndex bloch_multi_index(const SystemShape& shape, std::size_t flat);

struct BlochVector {
  SystemShape shape;
  Convention convention = Convention::Tilde;
  std::vector<double> components;  // lexicographic, (0,...,0) omitted

  double at(const MultiIndex& idx) const {
    return components[bloch_flat_index(shape, idx)];
  }
  double& at(const MultiIndex& idx) {
    return components[bloch_flat_index(shape, idx)];
  }
};

/// All-indices-nonzero restriction of a Bloch vector; prod (n_k^2 - 1) values,
/// lexicographic over (i_1-1, ..., i_N-1).
struct CorrelationTensor {
  SystemShape shape;
  std::vector<double> values;

  double at(const MultiIndex& idx) const;  // idx uses the 1-based ranges
};

std::size_t corr_value_count(const SystemShape& shape);
std::size_t corr_flat_index(const SystemShape& shape, const MultiIndex& idx);
MultiIndex corr_multi_index(const SystemShape& shape, std::size_t flat);

/// Forward transform for any Hermitian matrix (no positivity requirement);
/// imaginary residue above 1e-8 raises NumericalInconsistency, below that it
/// is discarded. Components with |c| < zero_tol are snapped to exact zeros so
/// that sign computations never see noise.
BlochVector bloch_of_hermitian(const Matrix& mat, const SystemShape& shape,
                               Convention c, double zero_tol = kZeroTol);
BlochVector to_bloch(const DensityMatrix& rho, Convention c);

/// Inverse transform. The result is Hermitian with unit trace but not
/// necessarily positive semidefinite; callers validate.
Matrix from_bloch(const BlochVector& b);

CorrelationTensor correlation_tensor(const BlochVector& b);

/// (sum |a_i|^p)^(1/p); p = infinity gives max |a_i|. Requires p >= 1.
double p_norm(std::span<const double> values, double p);
double p_norm(const BlochVector& b, double p);
double p_norm(const CorrelationTensor& t, double p);

/// Components with exactly one nonzero party index (the r_k block of party
/// `party`, 1-based), in generator order.
std::vector<double> local_vector(const BlochVector& b, int party);

struct PurityRelation {
  double trace_square;              // Tr(rho^2)
  double prime_rhs;                 // (1/prod n_k)(1 + prod(n_k-1) ||rho'||_2^2)
  std::optional<double> qubit_rhs;  // (1 + ||rho~||_2^2)/2^N for qubit shapes
};
PurityRelation purity_relation(const DensityMatrix& rho);

}  // namespace blochsep

#endif
