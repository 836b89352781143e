#ifndef BLOCHSEP_WITNESS_HPP
#define BLOCHSEP_WITNESS_HPP

#include <cstdint>
#include <map>

#include "blochsep/bloch.hpp"

// Witness operators realizing the 1-norm criteria as expectation values:
//   W = -a I_n + sum_a (n Sgn(rho_a) / Tr(B_a^2)) B_a
// gives Tr(rho W) = ||rho||_1 - a on the generating state, and a lower bound
// on ||.||_1 - a everywhere else. Built in the Tilde basis.

namespace blochsep {

enum class WitnessMode { FullNorm, CorrelationOnly };

const char* witness_mode_name(WitnessMode m);

struct Witness {
  SystemShape shape;
  Matrix matrix;  // Hermitian
  double offset_a = 0;
  WitnessMode mode = WitnessMode::FullNorm;
  std::map<MultiIndex, int> sign_pattern;  // nonzero signs only
};

/// FullNorm sums over every non-trivial multi-index, CorrelationOnly over the
/// all-nonzero ones; zero components contribute nothing.
Witness build_witness(const BlochVector& b, double a, WitnessMode mode);

/// Witness from an explicit sign pattern (the randomized-measurement case).
Witness witness_from_signs(const SystemShape& shape,
                           const std::map<MultiIndex, int>& signs, double a,
                           WitnessMode mode);

/// Re Tr(rho W); imaginary residue above 1e-10 raises NumericalInconsistency.
double evaluate_witness(const Witness& w, const DensityMatrix& rho);

/// `count` witnesses with independent uniform +-1 sign patterns over all
/// non-trivial multi-indices; deterministic for a given seed. Every member
/// satisfies Tr(rho W) <= ||rho||_1 - a on every state.
std::vector<Witness> random_sign_witnesses(const SystemShape& shape, double a,
                                           int count, std::uint64_t seed);

/// Offset preset matching the p = 1 correlation bound: prod sqrt(n_k^2 - 1).
double witness_offset_theorem1(const SystemShape& shape);

}  // namespace blochsep

#endif
