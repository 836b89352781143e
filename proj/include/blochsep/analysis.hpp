#ifndef BLOCHSEP_ANALYSIS_HPP
#define BLOCHSEP_ANALYSIS_HPP

#include <set>

#include "blochsep/certificates.hpp"
#include "blochsep/ppt.hpp"

// The criteria pipeline shared by the CLI and the verification suites:
// Theorems 1-2 on the correlation tensor, then the shape-appropriate
// sufficient criteria (3/4/5/6 for qubit shapes, 7 otherwise), then the
// partial-transpose cross-check.

namespace blochsep {

struct AnalysisOptions {
  std::vector<double> p_values{1.0, 2.0};  // theorem1 exponents
  std::set<std::string> criteria;          // empty = all applicable
  double decision_tol = kDecisionTol;
  bool run_oracle = true;
  bool want_decomposition = true;

  bool wants(const std::string& name) const {
    return criteria.empty() || criteria.count(name) > 0;
  }
};

struct PptRecord {
  std::vector<int> parties;
  double min_eigenvalue = 0;
  bool ppt = true;
};

struct Analysis {
  SystemShape shape;
  double bloch_norm1 = 0;
  double correlation_norm1 = 0;
  long nonzero_components = 0;
  std::vector<CriterionResult> criteria;
  std::optional<SeparableDecomposition> decomposition;
  std::string certifying_criterion;
  std::vector<PptRecord> oracle;
  bool oracle_all_ppt = true;
  bool oracle_ran = false;
  Verdict overall = Verdict::Inconclusive;
  bool consistent = true;  // never both certified and entangled / NPT
};

Analysis analyze(const DensityMatrix& rho, const AnalysisOptions& opt = {});

/// Names accepted by AnalysisOptions::criteria / the CLI --criteria flag.
const std::vector<std::string>& criterion_names();

}  // namespace blochsep

#endif
