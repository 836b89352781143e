#include "blochsep/catalog.hpp"

#include <cmath>
#include <random>

#include "blochsep/bloch.hpp"

namespace blochsep {

namespace {

Matrix projector(const Eigen::VectorXcd& ket) {
  return (ket * ket.adjoint()).eval();
}

}  // namespace

DensityMatrix isotropic(int d, double alpha) {
  if (d < 2) throw std::invalid_argument("isotropic: d >= 2");
  if (alpha < 0 || alpha > 1)
    throw std::invalid_argument("isotropic: alpha in [0,1]");
  long n = static_cast<long>(d) * d;
  Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(n);
  for (int i = 0; i < d; ++i) phi(static_cast<long>(i) * d + i) = 1.0 / std::sqrt(d);
  Matrix m = (1.0 - alpha) / static_cast<double>(n) * Matrix::Identity(n, n) +
             alpha * projector(phi);
  return validate_density(m, SystemShape{{d, d}}, 1e-10);
}

DensityMatrix noisy_ghz(int N, double alpha) {
  if (N < 2) throw std::invalid_argument("noisy_ghz: N >= 2");
  if (alpha < 0 || alpha > 1)
    throw std::invalid_argument("noisy_ghz: alpha in [0,1]");
  long n = 1L << N;
  Eigen::VectorXcd ghz = Eigen::VectorXcd::Zero(n);
  ghz(0) = ghz(n - 1) = 1.0 / std::sqrt(2.0);
  Matrix m = (1.0 - alpha) / static_cast<double>(n) * Matrix::Identity(n, n) +
             alpha * projector(ghz);
  return validate_density(m, SystemShape{std::vector<int>(N, 2)}, 1e-10);
}

DensityMatrix state_A(double alpha) {
  if (alpha < 0 || alpha > 1)
    throw std::invalid_argument("state_A: alpha in [0, 1/sqrt(2)]");
  const auto& pauli = generators(2);
  Matrix m = Matrix::Identity(8, 8) +
             alpha * kron({pauli[0], pauli[2], pauli[0]}) +
             alpha * kron({pauli[1], pauli[1], pauli[1]});
  m /= 8.0;
  // positivity enforced by the validation eigencheck, not hard-coded trust
  return validate_density(m, SystemShape{{2, 2, 2}}, 1e-10);
}

DensityMatrix bound_entangled(double a, double alpha) {
  if (a < 0 || a > 1) throw std::invalid_argument("bound_entangled: a in [0,1]");
  if (alpha < 0 || alpha > 1)
    throw std::invalid_argument("bound_entangled: alpha in [0,1]");
  // kets |ij> on [2,4] flatten as i*4+j
  auto ket = [](int i, int j) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(8);
    v(i * 4 + j) = 1.0;
    return v;
  };
  Matrix ent = Matrix::Zero(8, 8);
  for (int i = 1; i <= 3; ++i) {
    Eigen::VectorXcd psi = (ket(0, i - 1) + ket(1, i)) / std::sqrt(2.0);
    ent += (2.0 / 7.0) * projector(psi);
  }
  ent += (1.0 / 7.0) * projector(ket(0, 3));
  Eigen::VectorXcd phi = std::sqrt((1.0 + a) / 2.0) * ket(1, 0) +
                         std::sqrt((1.0 - a) / 2.0) * ket(1, 2);
  Matrix rho_A = (7.0 * a * ent + projector(phi)) / (7.0 * a + 1.0);
  Matrix m = alpha * rho_A + (1.0 - alpha) / 8.0 * Matrix::Identity(8, 8);
  return validate_density(m, SystemShape{{2, 4}}, 1e-10);
}

DensityMatrix reshape(const DensityMatrix& rho, const SystemShape& shape) {
  if (shape.total() != rho.shape.total())
    throw std::invalid_argument("reshape: total dimension must not change");
  return DensityMatrix{shape, rho.mat, rho.validation_tol};
}

namespace {

Eigen::VectorXcd random_ket(std::mt19937_64& rng, long n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd v(n);
  for (long i = 0; i < n; ++i) v(i) = Cplx(gauss(rng), gauss(rng));
  return v / v.norm();
}

DensityMatrix random_generic(const SystemShape& shape, std::mt19937_64& rng) {
  long n = shape.total();
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) g(i, j) = Cplx(gauss(rng), gauss(rng));
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  return validate_density(m, shape, 1e-10);
}

DensityMatrix random_product_mixture(const SystemShape& shape,
                                     std::mt19937_64& rng) {
  long n = shape.total();
  int terms = static_cast<int>(2 * n);
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(terms);
  double sum = 0;
  for (double& x : w) {
    x = expo(rng);
    sum += x;
  }
  Matrix m = Matrix::Zero(n, n);
  for (int t = 0; t < terms; ++t) {
    std::vector<Matrix> locals;
    for (int d : shape.dims) locals.push_back(projector(random_ket(rng, d)));
    m += (w[t] / sum) * kron(locals);
  }
  return validate_density(m, shape, 1e-10);
}

}  // namespace

std::vector<DensityMatrix> random_states(const SystemShape& shape,
                                         RandomKind kind, std::uint64_t seed,
                                         int count) {
  if (count < 1) throw std::invalid_argument("random_states: count >= 1");
  std::mt19937_64 rng(seed);
  std::vector<DensityMatrix> out;
  out.reserve(count);
  for (int c = 0; c < count; ++c)
    out.push_back(kind == RandomKind::Generic
                      ? random_generic(shape, rng)
                      : random_product_mixture(shape, rng));
  return out;
}

DensityMatrix random_state(const SystemShape& shape, RandomKind kind,
                           std::uint64_t seed) {
  return random_states(shape, kind, seed, 1).front();
}

namespace {

double need(const std::map<std::string, double>& params, const std::string& k) {
  auto it = params.find(k);
  if (it == params.end())
    throw std::invalid_argument("missing catalog parameter: " + k);
  return it->second;
}

int need_int(const std::map<std::string, double>& params, const std::string& k) {
  double v = need(params, k);
  int i = static_cast<int>(std::lround(v));
  if (std::abs(v - i) > 1e-9)
    throw std::invalid_argument("catalog parameter must be an integer: " + k);
  return i;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"isotropic",
       {"d", "alpha"},
       [](const std::map<std::string, double>& p) {
         return isotropic(need_int(p, "d"), need(p, "alpha"));
       }},
      {"noisy_ghz",
       {"N", "alpha"},
       [](const std::map<std::string, double>& p) {
         return noisy_ghz(need_int(p, "N"), need(p, "alpha"));
       }},
      {"state_A",
       {"alpha"},
       [](const std::map<std::string, double>& p) {
         return state_A(need(p, "alpha"));
       }},
      {"bound_entangled",
       {"a", "alpha"},
       [](const std::map<std::string, double>& p) {
         return bound_entangled(need(p, "a"), need(p, "alpha"));
       }},
  };
  return entries;
}

DensityMatrix build_catalog_state(const std::string& name,
                                  const std::map<std::string, double>& params) {
  for (const CatalogEntry& e : catalog_entries())
    if (e.name == name) return e.build(params);
  throw std::invalid_argument("unknown catalog family: " + name);
}

}  // namespace blochsep
