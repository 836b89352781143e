#include "blochsep/bloch.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace blochsep {

const char* convention_name(Convention c) {
  switch (c) {
    case Convention::Tilde: return "tilde";
    case Convention::Check: return "check";
    case Convention::Prime: return "prime";
  }
  return "?";
}

Convention convention_from_name(const std::string& name) {
  if (name == "tilde") return Convention::Tilde;
  if (name == "check") return Convention::Check;
  if (name == "prime") return Convention::Prime;
  throw std::invalid_argument("unknown basis convention: " + name);
}

namespace {

std::vector<Matrix> make_generators(int n) {
  std::vector<Matrix> gens;
  gens.reserve(n * n - 1);
  // symmetric: E_jk + E_kj
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      Matrix m = Matrix::Zero(n, n);
      m(j, k) = 1.0;
      m(k, j) = 1.0;
      gens.push_back(m);
    }
  // antisymmetric: -i E_jk + i E_kj
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      Matrix m = Matrix::Zero(n, n);
      m(j, k) = Cplx(0, -1);
      m(k, j) = Cplx(0, 1);
      gens.push_back(m);
    }
  // diagonal: sqrt(2/(l(l+1))) (E_00 + ... + E_{l-1,l-1} - l E_ll)
  for (int l = 1; l < n; ++l) {
    Matrix m = Matrix::Zero(n, n);
    double s = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
    for (int m0 = 0; m0 < l; ++m0) m(m0, m0) = s;
    m(l, l) = -s * l;
    gens.push_back(m);
  }
  return gens;
}

std::mutex g_gen_mutex;
std::map<int, std::shared_ptr<const std::vector<Matrix>>> g_gen_cache;

}  // namespace

const std::vector<Matrix>& generators(int n) {
  if (n < 2) throw std::invalid_argument("generators: n must be >= 2");
  std::lock_guard<std::mutex> lock(g_gen_mutex);
  auto it = g_gen_cache.find(n);
  if (it == g_gen_cache.end()) {
    it = g_gen_cache
             .emplace(n, std::make_shared<const std::vector<Matrix>>(
                             make_generators(n)))
             .first;
  }
  return *it->second;
}

double local_scale(Convention c, int n) {
  switch (c) {
    case Convention::Tilde:
    case Convention::Prime:
      return std::sqrt(n * (n - 1) / 2.0);
    case Convention::Check:
      return std::sqrt(n / (2.0 * (n - 1)));
  }
  return 0;
}

Matrix local_basis_element(Convention c, int n, int i) {
  if (i < 0 || i > n * n - 1)
    throw std::invalid_argument("local_basis_element: index out of range");
  if (i == 0) {
    double s = (c == Convention::Prime) ? std::sqrt(n - 1.0) : 1.0;
    return s * Matrix::Identity(n, n);
  }
  return local_scale(c, n) * generators(n)[i - 1];
}

Matrix basis_element(const SystemShape& shape, Convention c,
                     const MultiIndex& idx) {
  if (static_cast<int>(idx.size()) != shape.parties())
    throw std::invalid_argument("basis_element: index arity mismatch");
  std::vector<Matrix> locals;
  locals.reserve(idx.size());
  for (int k = 0; k < shape.parties(); ++k)
    locals.push_back(local_basis_element(c, shape.dims[k], idx[k]));
  return kron(locals);
}

namespace {
double local_norm2(Convention c, int n, int i) {
  if (i == 0) return (c == Convention::Prime) ? n * (n - 1.0) : n;
  if (c == Convention::Check) return n / (n - 1.0);
  return n * (n - 1.0);
}
}  // namespace

double basis_norm2(const SystemShape& shape, Convention c,
                   const MultiIndex& idx) {
  if (static_cast<int>(idx.size()) != shape.parties())
    throw std::invalid_argument("basis_norm2: index arity mismatch");
  double t = 1;
  for (int k = 0; k < shape.parties(); ++k) {
    int r = shape.dims[k] * shape.dims[k];
    if (idx[k] < 0 || idx[k] >= r)
      throw std::invalid_argument("basis_norm2: index out of range");
    t *= local_norm2(c, shape.dims[k], idx[k]);
  }
  return t;
}

std::size_t bloch_component_count(const SystemShape& shape) {
  std::size_t total = 1;
  for (int d : shape.dims) total *= static_cast<std::size_t>(d) * d;
  return total - 1;
}

std::size_t bloch_flat_index(const SystemShape& shape, const MultiIndex& idx) {
  if (static_cast<int>(idx.size()) != shape.parties())
    throw std::invalid_argument("bloch index arity mismatch");
  std::size_t flat = 0;
  bool all_zero = true;
  for (int k = 0; k < shape.parties(); ++k) {
    int r = shape.dims[k] * shape.dims[k];
    if (idx[k] < 0 || idx[k] >= r)
      throw std::invalid_argument("bloch index out of range");
    if (idx[k] != 0) all_zero = false;
    flat = flat * r + idx[k];
  }
  if (all_zero)
    throw std::invalid_argument("the all-zero component is implicit");
  return flat - 1;  // lexicographic rank with (0,...,0) skipped
}

MultiIndex bloch_multi_index(const SystemShape& shape, std::size_t flat) {
  std::size_t x = flat + 1;
  MultiIndex idx(shape.parties());
  for (int k = shape.parties() - 1; k >= 0; --k) {
    std::size_t r = static_cast<std::size_t>(shape.dims[k]) * shape.dims[k];
    idx[k] = static_cast<int>(x % r);
    x /= r;
  }
  return idx;
}

std::size_t corr_value_count(const SystemShape& shape) {
  std::size_t total = 1;
  for (int d : shape.dims)
    total *= static_cast<std::size_t>(d) * d - 1;
  return total;
}

std::size_t corr_flat_index(const SystemShape& shape, const MultiIndex& idx) {
  if (static_cast<int>(idx.size()) != shape.parties())
    throw std::invalid_argument("correlation index arity mismatch");
  std::size_t flat = 0;
  for (int k = 0; k < shape.parties(); ++k) {
    int m = shape.dims[k] * shape.dims[k] - 1;
    if (idx[k] < 1 || idx[k] > m)
      throw std::invalid_argument("correlation index out of range");
    flat = flat * m + (idx[k] - 1);
  }
  return flat;
}

MultiIndex corr_multi_index(const SystemShape& shape, std::size_t flat) {
  MultiIndex idx(shape.parties());
  for (int k = shape.parties() - 1; k >= 0; --k) {
    std::size_t m = static_cast<std::size_t>(shape.dims[k]) * shape.dims[k] - 1;
    idx[k] = static_cast<int>(flat % m) + 1;
    flat /= m;
  }
  return idx;
}

double CorrelationTensor::at(const MultiIndex& idx) const {
  return values[corr_flat_index(shape, idx)];
}

namespace {

// --- axis-transform engine -------------------------------------------------
//
// Both transform directions run over a complex buffer laid out as a
// mixed-radix tensor with one axis per party, radix n_k^2, pairing the row
// and column digits of that party: slot(a_k, b_k) = a_k n_k + b_k. A single
// small matrix applied along every axis then converts matrix elements into
// basis coefficients (or back) in O(n^2 sum n_k^2) work.

using Buffer = std::vector<Cplx>;

Buffer matrix_to_paired(const Matrix& mat, const SystemShape& shape) {
  long n = shape.total();
  int N = shape.parties();
  Buffer buf(static_cast<std::size_t>(n) * n);
  std::vector<int> ad(N), bd(N);
  for (long a = 0; a < n; ++a) {
    long x = a;
    for (int k = N - 1; k >= 0; --k) { ad[k] = static_cast<int>(x % shape.dims[k]); x /= shape.dims[k]; }
    for (long b = 0; b < n; ++b) {
      long y = b;
      for (int k = N - 1; k >= 0; --k) { bd[k] = static_cast<int>(y % shape.dims[k]); y /= shape.dims[k]; }
      std::size_t t = 0;
      for (int k = 0; k < N; ++k)
        t = t * (shape.dims[k] * shape.dims[k]) + (ad[k] * shape.dims[k] + bd[k]);
      buf[t] = mat(a, b);
    }
  }
  return buf;
}

Matrix paired_to_matrix(const Buffer& buf, const SystemShape& shape) {
  long n = shape.total();
  int N = shape.parties();
  Matrix mat(n, n);
  std::vector<int> ad(N), bd(N);
  for (long a = 0; a < n; ++a) {
    long x = a;
    for (int k = N - 1; k >= 0; --k) { ad[k] = static_cast<int>(x % shape.dims[k]); x /= shape.dims[k]; }
    for (long b = 0; b < n; ++b) {
      long y = b;
      for (int k = N - 1; k >= 0; --k) { bd[k] = static_cast<int>(y % shape.dims[k]); y /= shape.dims[k]; }
      std::size_t t = 0;
      for (int k = 0; k < N; ++k)
        t = t * (shape.dims[k] * shape.dims[k]) + (ad[k] * shape.dims[k] + bd[k]);
      mat(a, b) = buf[t];
    }
  }
  return mat;
}

void apply_axis(Buffer& buf, const std::vector<long>& radices, int axis,
                const Eigen::MatrixXcd& op) {
  long r = radices[axis];
  long stride = 1;
  for (std::size_t j = axis + 1; j < radices.size(); ++j) stride *= radices[j];
  long block = r * stride;
  long total = static_cast<long>(buf.size());
  Eigen::VectorXcd x(r), y(r);
  for (long base = 0; base < total; base += block)
    for (long inner = 0; inner < stride; ++inner) {
      for (long i = 0; i < r; ++i) x(i) = buf[base + i * stride + inner];
      y.noalias() = op * x;
      for (long i = 0; i < r; ++i) buf[base + i * stride + inner] = y(i);
    }
}

// c_i = (n_k / Tr(B_i^2)) sum_{a,b} B_i(b,a) rho(a,b), one party at a time.
Eigen::MatrixXcd forward_op(Convention c, int n) {
  Eigen::MatrixXcd op(n * n, n * n);
  for (int i = 0; i < n * n; ++i) {
    Matrix B = local_basis_element(c, n, i);
    double scale = n / local_norm2(c, n, i);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        op(i, a * n + b) = scale * B(b, a);
  }
  return op;
}

// rho(a,b) = (1/n_k) sum_i c_i B_i(a,b), one party at a time.
Eigen::MatrixXcd inverse_op(Convention c, int n) {
  Eigen::MatrixXcd op(n * n, n * n);
  for (int i = 0; i < n * n; ++i) {
    Matrix B = local_basis_element(c, n, i);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        op(a * n + b, i) = B(a, b) / static_cast<double>(n);
  }
  return op;
}

std::vector<long> pair_radices(const SystemShape& shape) {
  std::vector<long> r;
  for (int d : shape.dims) r.push_back(static_cast<long>(d) * d);
  return r;
}

// Coefficient of I_n in the full expansion (the slot-0 value of a unit-trace
// input): 1 for Tilde/Check, 1/prod sqrt(n_k - 1) for Prime.
double zero_slot_value(Convention c, const SystemShape& shape) {
  if (c != Convention::Prime) return 1.0;
  double s = 1.0;
  for (int d : shape.dims) s *= std::sqrt(d - 1.0);
  return 1.0 / s;
}

}  // namespace

BlochVector bloch_of_hermitian(const Matrix& mat, const SystemShape& shape,
                               Convention c, double zero_tol) {
  long n = shape.total();
  if (mat.rows() != n || mat.cols() != n)
    throw std::invalid_argument("bloch_of_hermitian: matrix/shape mismatch");
  Buffer buf = matrix_to_paired(mat, shape);
  auto radices = pair_radices(shape);
  for (int k = 0; k < shape.parties(); ++k)
    apply_axis(buf, radices, k, forward_op(c, shape.dims[k]));

  double max_imag = 0;
  for (const Cplx& v : buf) max_imag = std::max(max_imag, std::abs(v.imag()));
  if (max_imag > 1e-8)
    throw NumericalInconsistency(
        "bloch transform produced imaginary residue " + std::to_string(max_imag));

  BlochVector out;
  out.shape = shape;
  out.convention = c;
  out.components.resize(buf.size() - 1);
  for (std::size_t t = 1; t < buf.size(); ++t) {
    double v = buf[t].real();
    out.components[t - 1] = (std::abs(v) < zero_tol) ? 0.0 : v;
  }
  return out;
}

BlochVector to_bloch(const DensityMatrix& rho, Convention c) {
  return bloch_of_hermitian(rho.mat, rho.shape, c);
}

Matrix from_bloch(const BlochVector& b) {
  if (b.components.size() != bloch_component_count(b.shape))
    throw std::invalid_argument("from_bloch: component count mismatch");
  Buffer buf(b.components.size() + 1);
  buf[0] = zero_slot_value(b.convention, b.shape);
  for (std::size_t t = 0; t < b.components.size(); ++t)
    buf[t + 1] = b.components[t];
  auto radices = pair_radices(b.shape);
  for (int k = 0; k < b.shape.parties(); ++k)
    apply_axis(buf, radices, k, inverse_op(b.convention, b.shape.dims[k]));
  return paired_to_matrix(buf, b.shape);
}

CorrelationTensor correlation_tensor(const BlochVector& b) {
  CorrelationTensor t;
  t.shape = b.shape;
  t.values.resize(corr_value_count(b.shape));
  for (std::size_t f = 0; f < t.values.size(); ++f)
    t.values[f] = b.components[bloch_flat_index(b.shape, corr_multi_index(b.shape, f))];
  return t;
}

double p_norm(std::span<const double> values, double p) {
  if (std::isinf(p)) {
    double m = 0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
  }
  if (p < 1.0) throw std::invalid_argument("p_norm: requires p >= 1");
  double s = 0;
  for (double v : values) s += std::pow(std::abs(v), p);
  return std::pow(s, 1.0 / p);
}

double p_norm(const BlochVector& b, double p) {
  return p_norm(std::span<const double>(b.components), p);
}

double p_norm(const CorrelationTensor& t, double p) {
  return p_norm(std::span<const double>(t.values), p);
}

std::vector<double> local_vector(const BlochVector& b, int party) {
  if (party < 1 || party > b.shape.parties())
    throw std::invalid_argument("local_vector: party out of range");
  int m = b.shape.dims[party - 1] * b.shape.dims[party - 1] - 1;
  std::vector<double> r(m);
  MultiIndex idx(b.shape.parties(), 0);
  for (int i = 1; i <= m; ++i) {
    idx[party - 1] = i;
    r[i - 1] = b.at(idx);
  }
  return r;
}

PurityRelation purity_relation(const DensityMatrix& rho) {
  PurityRelation out{};
  out.trace_square = (rho.mat * rho.mat).trace().real();

  BlochVector prime = to_bloch(rho, Convention::Prime);
  double prod_n = 1, prod_nm1 = 1;
  for (int d : rho.shape.dims) {
    prod_n *= d;
    prod_nm1 *= d - 1;
  }
  double norm2 = p_norm(prime, 2.0);
  out.prime_rhs = (1.0 + prod_nm1 * norm2 * norm2) / prod_n;

  if (rho.shape.all_qubits()) {
    BlochVector tilde = to_bloch(rho, Convention::Tilde);
    double t2 = p_norm(tilde, 2.0);
    out.qubit_rhs = (1.0 + t2 * t2) / prod_n;
  }
  return out;
}

}  // namespace blochsep
