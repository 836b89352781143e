#include "blochsep/witness.hpp"

#include <cmath>
#include <random>

namespace blochsep {

const char* witness_mode_name(WitnessMode m) {
  return m == WitnessMode::FullNorm ? "full_norm" : "correlation_only";
}

Witness witness_from_signs(const SystemShape& shape,
                           const std::map<MultiIndex, int>& signs, double a,
                           WitnessMode mode) {
  // W + (a + 1/n) I has Bloch coefficients n^2 sgn / Tr(B^2); one inverse
  // transform builds the matrix.
  long n = shape.total();
  BlochVector coeff;
  coeff.shape = shape;
  coeff.convention = Convention::Tilde;
  coeff.components.assign(bloch_component_count(shape), 0.0);
  for (const auto& [idx, s] : signs) {
    if (s == 0) continue;
    coeff.at(idx) = static_cast<double>(n) * static_cast<double>(n) * s /
                    basis_norm2(shape, Convention::Tilde, idx);
  }
  Witness w;
  w.shape = shape;
  w.offset_a = a;
  w.mode = mode;
  w.sign_pattern = signs;
  w.matrix = from_bloch(coeff) -
             (a + 1.0 / static_cast<double>(n)) * Matrix::Identity(n, n);
  return w;
}

Witness build_witness(const BlochVector& b, double a, WitnessMode mode) {
  if (b.convention != Convention::Tilde)
    throw UnsupportedConvention("build_witness: tilde representation only");
  std::map<MultiIndex, int> signs;
  for (std::size_t f = 0; f < b.components.size(); ++f) {
    double v = b.components[f];
    if (v == 0) continue;
    MultiIndex idx = bloch_multi_index(b.shape, f);
    if (mode == WitnessMode::CorrelationOnly) {
      bool all_nonzero = true;
      for (int i : idx) all_nonzero = all_nonzero && i != 0;
      if (!all_nonzero) continue;
    }
    signs[idx] = (v > 0) ? 1 : -1;
  }
  return witness_from_signs(b.shape, signs, a, mode);
}

double evaluate_witness(const Witness& w, const DensityMatrix& rho) {
  if (rho.mat.rows() != w.matrix.rows())
    throw std::invalid_argument("evaluate_witness: dimension mismatch");
  Cplx t = (rho.mat * w.matrix).trace();
  if (std::abs(t.imag()) > 1e-10)
    throw NumericalInconsistency("witness expectation has imaginary residue " +
                                 std::to_string(t.imag()));
  return t.real();
}

std::vector<Witness> random_sign_witnesses(const SystemShape& shape, double a,
                                           int count, std::uint64_t seed) {
  if (count < 1)
    throw std::invalid_argument("random_sign_witnesses: count >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Witness> out;
  out.reserve(count);
  std::size_t components = bloch_component_count(shape);
  for (int c = 0; c < count; ++c) {
    std::map<MultiIndex, int> signs;
    for (std::size_t f = 0; f < components; ++f)
      signs[bloch_multi_index(shape, f)] = (rng() & 1) ? 1 : -1;
    out.push_back(witness_from_signs(shape, signs, a, WitnessMode::FullNorm));
  }
  return out;
}

double witness_offset_theorem1(const SystemShape& shape) {
  double a = 1;
  for (int d : shape.dims) a *= std::sqrt(static_cast<double>(d) * d - 1.0);
  return a;
}

}  // namespace blochsep
