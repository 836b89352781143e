#ifndef BLOCHSEP_SWEEP_HPP
#define BLOCHSEP_SWEEP_HPP

#include <functional>
#include <vector>

namespace blochsep {

std::vector<double> linspace(double lo, double hi, int points);

/// Locate the flip point of a monotone predicate by bisection; pred(lo) and
/// pred(hi) must differ. Returns the midpoint of the final bracket, accurate
/// to tol.
double bisect_flip(const std::function<bool(double)>& pred, double lo,
                   double hi, double tol = 1e-9);

}  // namespace blochsep

#endif
