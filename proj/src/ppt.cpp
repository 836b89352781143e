#include "blochsep/ppt.hpp"

namespace blochsep {

namespace {

void check_bipartition(const DensityMatrix& rho,
                       const std::vector<int>& parties) {
  if (parties.empty() ||
      static_cast<int>(parties.size()) >= rho.shape.parties())
    throw std::invalid_argument("ppt: bipartition must be non-trivial");
}

}  // namespace

double ppt_min_eigenvalue(const DensityMatrix& rho,
                          const std::vector<int>& parties) {
  check_bipartition(rho, parties);
  return min_eigenvalue(partial_transpose(rho, parties));
}

bool is_ppt(const DensityMatrix& rho, const std::vector<int>& parties,
            double tol) {
  return ppt_min_eigenvalue(rho, parties) >= -tol;
}

bool two_qubit_separable(const DensityMatrix& rho, double tol) {
  if (!(rho.shape == SystemShape{{2, 2}}))
    throw std::invalid_argument("two_qubit_separable: shape [2,2] only");
  return is_ppt(rho, {1}, tol);
}

std::vector<std::vector<int>> bipartition_cuts(int parties) {
  if (parties < 2) return {};
  std::vector<std::vector<int>> cuts;
  if (parties <= 4) {
    // subsets containing party 1, excluding the full set: one per bipartition
    for (unsigned mask = 1; mask < (1u << parties); mask += 2) {
      if (mask == (1u << parties) - 1) continue;
      std::vector<int> cut;
      for (int k = 0; k < parties; ++k)
        if ((mask >> k) & 1) cut.push_back(k + 1);
      cuts.push_back(cut);
    }
  } else {
    for (int k = 1; k <= parties; ++k) cuts.push_back({k});
  }
  return cuts;
}

bool ppt_all_bipartitions(const DensityMatrix& rho, double tol) {
  for (const auto& cut : bipartition_cuts(rho.shape.parties()))
    if (!is_ppt(rho, cut, tol)) return false;
  return true;
}

}  // namespace blochsep
