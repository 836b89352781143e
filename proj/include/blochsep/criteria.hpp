#ifndef BLOCHSEP_CRITERIA_HPP
#define BLOCHSEP_CRITERIA_HPP

#include <map>

#include "blochsep/bloch.hpp"

// Necessary conditions for full separability; violation certifies
// entanglement. These never claim separability: non-violation is
// INCONCLUSIVE.

namespace blochsep {

enum class Verdict { Entangled, SeparableCertified, Inconclusive };

const char* verdict_name(Verdict v);

struct CriterionResult {
  std::string criterion;
  Verdict verdict = Verdict::Inconclusive;
  double lhs = 0;
  double bound = 0;
  std::map<std::string, double> detail;
  std::vector<MultiIndex> chosen_indices;
};

/// Entrywise sign of the correlation tensor, Sgn(0) = 0. Zeros were already
/// decided upstream by the Bloch zero_tol snap.
struct SignTensor {
  SystemShape shape;
  std::vector<int> entries;  // -1 / 0 / +1, correlation layout

  int at(const MultiIndex& idx) const {
    return entries[corr_flat_index(shape, idx)];
  }
};

SignTensor sign_tensor(const CorrelationTensor& t);

/// ||T||_p <= prod m_k^(1/p - 1/2) for 1 <= p <= 2 (m_k = n_k^2 - 1),
/// ||T||_p <= 1 for p > 2. Entangled when violated beyond decision_tol.
CriterionResult theorem1_check(const CorrelationTensor& t, double p,
                               double decision_tol = kDecisionTol);

/// M(rho) = (1/N) sum_k max_a sum_{other indices} |t_{..,a at k,..}|, the
/// axis index a running over the full range 1..n_k^2-1. Needs N >= 2.
double theorem2_M(const SignTensor& t);

/// ||T||_1 <= M(rho). Entangled when violated beyond decision_tol.
CriterionResult theorem2_check(const CorrelationTensor& t,
                               double decision_tol = kDecisionTol);

}  // namespace blochsep

#endif
