#ifndef BLOCHSEP_CATALOG_HPP
#define BLOCHSEP_CATALOG_HPP

#include <cstdint>
#include <functional>
#include <map>

#include "blochsep/linalg.hpp"

// State families used throughout the test surface, plus seeded random-state
// generators. Every constructor validates its output at tolerance 1e-10.

namespace blochsep {

/// (1-alpha)/d^2 I + alpha |phi+><phi+| on [d,d].
DensityMatrix isotropic(int d, double alpha);

/// (1-alpha)/2^N I + alpha |GHZ><GHZ| on N qubits.
DensityMatrix noisy_ghz(int N, double alpha);

/// alpha A + (1-alpha) I/8 with A = (I + s1 s3 s1 + s2 s2 s2)/8; positivity
/// holds for alpha <= 1/sqrt(2) and is enforced by an eigenvalue check.
DensityMatrix state_A(double alpha);

/// The 2x4 bound-entangled family alpha rho_A + (1-alpha) I/8 on shape [2,4];
/// reinterpret with reshape() to analyze it as three qubits.
DensityMatrix bound_entangled(double a, double alpha);

/// Same matrix, new subsystem split (total dimension must agree).
DensityMatrix reshape(const DensityMatrix& rho, const SystemShape& shape);

enum class RandomKind { Generic, ProductMixture };

/// Generic: normalized G G^dag with complex standard-normal G.
/// ProductMixture: convex mixtures of random pure product states.
/// Deterministic for a given seed.
std::vector<DensityMatrix> random_states(const SystemShape& shape,
                                         RandomKind kind, std::uint64_t seed,
                                         int count);
DensityMatrix random_state(const SystemShape& shape, RandomKind kind,
                           std::uint64_t seed);

/// CLI-facing registry: family name, parameter names, builder.
struct CatalogEntry {
  std::string name;
  std::vector<std::string> params;
  std::function<DensityMatrix(const std::map<std::string, double>&)> build;
};

const std::vector<CatalogEntry>& catalog_entries();
DensityMatrix build_catalog_state(const std::string& name,
                                  const std::map<std::string, double>& params);

}  // namespace blochsep

#endif
