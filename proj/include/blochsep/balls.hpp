#ifndef BLOCHSEP_BALLS_HPP
#define BLOCHSEP_BALLS_HPP

#include "blochsep/bloch.hpp"

// Separable-ball geometry for N-qubit systems in the Tilde representation:
// the largest l_p ball around the maximally mixed state containing only
// separable states, and the smallest one containing every separable state.

namespace blochsep {

/// Radius of the largest l_1 separable ball: the constant 1 for every N.
double largest_l1_radius(int N);

/// (I + sigma1^xN + eps sigma2^xN)/2^N. Shows that no l_1 ball of radius
/// 1 + eps stays separable. For eps > 0 this matrix is Hermitian with unit
/// trace but not positive semidefinite, so it is returned unvalidated; its
/// correlation tensor is what the criteria consume.
Matrix tightness_family_matrix(int N, double eps);
BlochVector tightness_family_bloch(int N, double eps);

/// Radius R_E(l_p) of the minimal l_p ball containing all separable states:
/// ((3^(1-p/2)+1)^N - 1)^(1/p) for 1 <= p <= 2, (2^N-1)^(1/p) for p > 2,
/// and 1 at p = infinity.
double r_e(double p, int N);

/// The separable state attaining R_E(l_p): rho1^xN with local Bloch vector
/// (1,1,1)/sqrt(3) for 1 <= p <= 2, rho0^xN with local vector (1,0,0) for
/// p > 2 and infinity.
DensityMatrix extremal_state(double p, int N);

/// Known bracket for R(l_2): [sqrt(1/((4/9) 3^N - 1)), sqrt(1/(2^N - 1))].
/// The exact radius is open; only the interval is exposed.
std::pair<double, double> r_l2_interval(int N);

}  // namespace blochsep

#endif
