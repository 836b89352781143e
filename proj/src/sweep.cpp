#include "blochsep/sweep.hpp"

#include <stdexcept>

namespace blochsep {

std::vector<double> linspace(double lo, double hi, int points) {
  if (points < 2) throw std::invalid_argument("linspace: points >= 2");
  std::vector<double> out(points);
  for (int i = 0; i < points; ++i)
    out[i] = lo + (hi - lo) * i / (points - 1);
  out.back() = hi;
  return out;
}

double bisect_flip(const std::function<bool(double)>& pred, double lo,
                   double hi, double tol) {
  bool at_lo = pred(lo);
  if (pred(hi) == at_lo)
    throw std::invalid_argument("bisect_flip: no sign change in bracket");
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (pred(mid) == at_lo)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace blochsep
