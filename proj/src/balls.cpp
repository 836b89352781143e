#include "blochsep/balls.hpp"

#include <cmath>

namespace blochsep {

double largest_l1_radius(int N) {
  if (N < 1) throw std::invalid_argument("largest_l1_radius: N >= 1");
  return 1.0;
}

Matrix tightness_family_matrix(int N, double eps) {
  if (N < 1) throw std::invalid_argument("tightness_family_matrix: N >= 1");
  const auto& pauli = generators(2);
  std::vector<Matrix> x(N, pauli[0]), y(N, pauli[1]);
  long n = 1L << N;
  Matrix m = Matrix::Identity(n, n) + kron(x) + eps * kron(y);
  return m / static_cast<double>(n);
}

BlochVector tightness_family_bloch(int N, double eps) {
  if (N < 1) throw std::invalid_argument("tightness_family_bloch: N >= 1");
  BlochVector b;
  b.shape = SystemShape{std::vector<int>(N, 2)};
  b.convention = Convention::Tilde;
  b.components.assign(bloch_component_count(b.shape), 0.0);
  b.at(MultiIndex(N, 1)) = 1.0;
  b.at(MultiIndex(N, 2)) = eps;
  return b;
}

double r_e(double p, int N) {
  if (N < 1) throw std::invalid_argument("r_e: N >= 1");
  if (std::isinf(p)) return 1.0;
  if (p < 1.0) throw std::invalid_argument("r_e: requires p >= 1");
  if (p <= 2.0)
    return std::pow(std::pow(std::pow(3.0, 1.0 - p / 2.0) + 1.0, N) - 1.0,
                    1.0 / p);
  return std::pow(std::pow(2.0, N) - 1.0, 1.0 / p);
}

DensityMatrix extremal_state(double p, int N) {
  if (N < 1) throw std::invalid_argument("extremal_state: N >= 1");
  if (!std::isinf(p) && p < 1.0)
    throw std::invalid_argument("extremal_state: requires p >= 1");
  const auto& pauli = generators(2);
  Matrix local;
  if (!std::isinf(p) && p <= 2.0) {
    double s = 1.0 / std::sqrt(3.0);
    local = (Matrix::Identity(2, 2) + s * (pauli[0] + pauli[1] + pauli[2])) / 2.0;
  } else {
    local = (Matrix::Identity(2, 2) + pauli[0]) / 2.0;
  }
  std::vector<Matrix> factors(N, local);
  SystemShape shape{std::vector<int>(N, 2)};
  return validate_density(kron(factors), shape, 1e-10);
}

std::pair<double, double> r_l2_interval(int N) {
  if (N < 1) throw std::invalid_argument("r_l2_interval: N >= 1");
  double lo = std::sqrt(1.0 / ((4.0 / 9.0) * std::pow(3.0, N) - 1.0));
  double hi = std::sqrt(1.0 / (std::pow(2.0, N) - 1.0));
  return {lo, hi};
}

}  // namespace blochsep
