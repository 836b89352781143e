#ifndef BLOCHSEP_CERTIFICATES_HPP
#define BLOCHSEP_CERTIFICATES_HPP

#include <cstdint>
#include <optional>

#include "blochsep/criteria.hpp"

// Sufficient conditions for full separability with constructive
// decompositions. The machinery rests on the characters of (Z/2Z)^N: each
// character assigns +/-1 signs to the parties of a product state, and
// averaging the 2^(m-1) characters fixing a chosen group element isolates a
// single basis direction. Every certificate carries a decomposition that
// verify_decomposition can check independently.

namespace blochsep {

/// Character table of (Z/2Z)^N. Rows are the 2^N characters (binary counting,
/// party 1 most significant); columns are group elements as subsets of
/// {1..N}, ordered by size then lexicographically. Entries are exactly +/-1.
struct CharacterTable {
  int level = 0;
  std::vector<std::int8_t> values;          // 2^N x 2^N, row-major
  std::vector<std::uint32_t> column_elements;  // bit k-1 set <=> party k in g

  int size() const { return 1 << level; }
  int at(int row, int col) const { return values[static_cast<std::size_t>(row) * size() + col]; }
  /// Character value of row u at the group element with the given party set.
  int value_at(int row, std::uint32_t element_mask) const;
  int column_of(std::uint32_t element_mask) const;
};

/// Cached; valid for 1 <= N <= 12.
const CharacterTable& character_table(int N);

struct ProductState {
  std::vector<Matrix> locals;  // one n_k x n_k factor per party
};

Matrix expand(const ProductState& ps);

/// Convex combination of product density matrices certifying separability of
/// a target state: all weights >= 0, weights sum to 1, and the weighted
/// expansion reconstructs the target.
struct SeparableDecomposition {
  SystemShape target_shape;
  std::vector<std::pair<double, ProductState>> terms;
};

Matrix reconstruct(const SeparableDecomposition& d);

struct VerifyReport {
  bool ok = false;
  double weight_sum = 0;
  double min_weight = 0;
  double frobenius_distance = 0;
  std::vector<std::string> violations;
};

VerifyReport verify_decomposition(const SeparableDecomposition& d,
                                  const Matrix& target, double tol);
VerifyReport verify_decomposition(const SeparableDecomposition& d,
                                  const DensityMatrix& target, double tol);

/// Decomposition of (1/n)(I_n + sign * B_idx) into 2^(m-1) equally weighted
/// product states, m = number of parties with a nonzero index. Active parties
/// carry (1/n_k)(I + x_k B_{i_k}) with character-derived signs whose product
/// equals `sign`; inactive parties carry I/n_k. Tilde needs every active
/// party to be a qubit; Check works for any shape.
SeparableDecomposition u_state_decomposition(const SystemShape& shape,
                                             const MultiIndex& idx, int sign,
                                             Convention c);

struct CertificateResult {
  CriterionResult verdict;
  std::optional<SeparableDecomposition> decomposition;
};

/// ||rho||_1 <= 1 certifies full separability of an N-qubit state (Tilde).
CertificateResult theorem3(const BlochVector& b,
                           double decision_tol = kDecisionTol);

/// 3-qubit: exhausts (i,j,k) in {1,2,3}^3 with compatible pair-component
/// signs; bound 1 + 2 min{|rho_0jk|, |rho_i0k|, |rho_ij0|} at the best tuple.
CertificateResult theorem4(const BlochVector& b,
                           double decision_tol = kDecisionTol);

/// 3-qubit: three sign-compatible tuples with distinct i's, j's and k's;
/// bound 1 + 2 sum_t min_t at the best assignment.
CertificateResult theorem5(const BlochVector& b,
                           double decision_tol = kDecisionTol);

/// 4-qubit: exhausts (i,j,k,l) in {1,2,3}^4 under the four sign conditions;
/// bound 1 + 2*lessmid of the seven linked magnitudes. The zero-adjusted sign
/// pattern must match a character row before a tuple may certify.
CertificateResult theorem6(const BlochVector& b,
                           double decision_tol = kDecisionTol);

/// Check-representation criteria for arbitrary shapes: part (1) is the
/// ||s_rho||_1 <= 1 ball for any N; parts (2) and (3) mirror theorems 4 and 5
/// for N = 3 with index ranges 1..n_k^2-1.
CertificateResult theorem7(const BlochVector& b,
                           double decision_tol = kDecisionTol);

/// The separable N-qubit state whose Bloch support is every even-weight
/// product of the chosen local axes, with its two-term product decomposition.
struct GhzCompatible {
  DensityMatrix state;
  SeparableDecomposition decomposition;
};
GhzCompatible ghz_compatible_state(int N, const std::vector<int>& axes);

}  // namespace blochsep

#endif
