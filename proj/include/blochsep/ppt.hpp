#ifndef BLOCHSEP_PPT_HPP
#define BLOCHSEP_PPT_HPP

#include "blochsep/linalg.hpp"

// Independent partial-transpose oracle used to cross-validate every verdict
// the Bloch criteria produce. Exact separability decision for 2-qubit states.

namespace blochsep {

double ppt_min_eigenvalue(const DensityMatrix& rho,
                          const std::vector<int>& parties);

/// True iff the partial transpose over `parties` stays positive semidefinite.
/// The bipartition must be non-trivial (neither empty nor every party).
bool is_ppt(const DensityMatrix& rho, const std::vector<int>& parties,
            double tol = 1e-10);

/// PPT is exact at 2x2: equals separability.
bool two_qubit_separable(const DensityMatrix& rho, double tol = 1e-10);

/// The bipartitions checked by cross-validation: all 2^(N-1)-1 cuts up to
/// N = 4 parties, single-party-vs-rest cuts beyond.
std::vector<std::vector<int>> bipartition_cuts(int parties);

bool ppt_all_bipartitions(const DensityMatrix& rho, double tol = 1e-10);

}  // namespace blochsep

#endif
