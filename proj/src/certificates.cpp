#include "blochsep/certificates.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>

namespace blochsep {

int CharacterTable::value_at(int row, std::uint32_t element_mask) const {
  std::uint32_t u_mask = 0;
  for (int k = 1; k <= level; ++k)
    if ((row >> (level - k)) & 1) u_mask |= 1u << (k - 1);
  return (std::popcount(u_mask & element_mask) % 2 == 0) ? 1 : -1;
}

int CharacterTable::column_of(std::uint32_t element_mask) const {
  for (int c = 0; c < size(); ++c)
    if (column_elements[c] == element_mask) return c;
  throw std::invalid_argument("character_table: no such group element");
}

namespace {

std::vector<std::uint32_t> subsets_by_size_then_lex(int N) {
  std::vector<std::uint32_t> out;
  out.push_back(0);
  for (int s = 1; s <= N; ++s) {
    std::vector<int> comb(s);
    for (int i = 0; i < s; ++i) comb[i] = i + 1;  // parties 1..s
    while (true) {
      std::uint32_t mask = 0;
      for (int p : comb) mask |= 1u << (p - 1);
      out.push_back(mask);
      int i = s - 1;
      while (i >= 0 && comb[i] == N - (s - 1 - i)) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return out;
}

CharacterTable make_character_table(int N) {
  CharacterTable t;
  t.level = N;
  t.column_elements = subsets_by_size_then_lex(N);
  int size = 1 << N;
  t.values.resize(static_cast<std::size_t>(size) * size);
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c)
      t.values[static_cast<std::size_t>(r) * size + c] =
          static_cast<std::int8_t>(t.value_at(r, t.column_elements[c]));
  return t;
}

std::mutex g_table_mutex;
std::map<int, std::shared_ptr<const CharacterTable>> g_table_cache;

int sgn_of(double v) { return (v > 0) - (v < 0); }
int sgn_or_plus(double v) { return v >= 0 ? 1 : -1; }  // zero maps to plus

ProductState mixed_product(const SystemShape& shape) {
  ProductState ps;
  for (int d : shape.dims)
    ps.locals.push_back(Matrix::Identity(d, d) / static_cast<double>(d));
  return ps;
}

void append_u_terms(SeparableDecomposition& dst, const SystemShape& shape,
                    const MultiIndex& idx, int sign, Convention c,
                    double weight) {
  if (weight <= 0) return;
  SeparableDecomposition u = u_state_decomposition(shape, idx, sign, c);
  for (auto& [w, ps] : u.terms) dst.terms.emplace_back(w * weight, std::move(ps));
}

// weight/2 on each of prod_k (I + chi_k B_{axes_k})/n_k and its global
// negation; the average keeps exactly the even-weight sign products.
void append_two_character_block(SeparableDecomposition& dst,
                                const SystemShape& shape, Convention c,
                                const MultiIndex& axes,
                                const std::vector<int>& chi, double weight) {
  if (weight <= 0) return;
  for (int s : {+1, -1}) {
    ProductState ps;
    for (int k = 0; k < shape.parties(); ++k) {
      int n = shape.dims[k];
      Matrix B = local_basis_element(c, n, axes[k]);
      ps.locals.push_back(
          (Matrix::Identity(n, n) + static_cast<double>(s * chi[k]) * B) /
          static_cast<double>(n));
    }
    dst.terms.emplace_back(weight / 2.0, std::move(ps));
  }
}

// Component-by-component ball expansion, valid whenever ||b||_1 <= 1 (Tilde
// on qubits, Check anywhere).
SeparableDecomposition ball_decomposition(const BlochVector& b) {
  SeparableDecomposition d{b.shape, {}};
  for (std::size_t f = 0; f < b.components.size(); ++f) {
    double v = b.components[f];
    if (v == 0) continue;
    append_u_terms(d, b.shape, bloch_multi_index(b.shape, f), sgn_of(v),
                   b.convention, std::abs(v));
  }
  double w0 = 1.0 - p_norm(b, 1.0);
  if (w0 > 0) d.terms.emplace_back(w0, mixed_product(b.shape));
  return d;
}

// One (i,j,k) choice for theorem4 / theorem7 part 2: the three pair components
// it links, their sign compatibility, and the bound ingredient.
struct TripleCandidate {
  int i = 0, j = 0, k = 0;
  MultiIndex pos[3];  // (0,j,k), (i,0,k), (i,j,0)
  double val[3] = {0, 0, 0};
  double min_abs = 0;
  bool admissible = false;
};

TripleCandidate make_triple(const BlochVector& b, int i, int j, int k) {
  TripleCandidate t;
  t.i = i; t.j = j; t.k = k;
  t.pos[0] = {0, j, k};
  t.pos[1] = {i, 0, k};
  t.pos[2] = {i, j, 0};
  for (int q = 0; q < 3; ++q) t.val[q] = b.at(t.pos[q]);
  t.min_abs = std::min({std::abs(t.val[0]), std::abs(t.val[1]), std::abs(t.val[2])});
  t.admissible = sgn_of(t.val[0]) * sgn_of(t.val[1]) * sgn_of(t.val[2]) >= 0;
  return t;
}

// Isolate the listed sign-compatible triples: the middle magnitude anchors
// the two-character block, the largest keeps its own sign as a single, the
// smallest enters with the opposite sign. Everything else expands
// generically. Degenerate triples (min 0) contribute nothing and their
// components stay in the generic remainder.
SeparableDecomposition triple_decomposition(
    const BlochVector& b, const std::vector<TripleCandidate>& triples) {
  SeparableDecomposition d{b.shape, {}};
  std::set<std::size_t> isolated;
  double bonus = 0;
  for (const TripleCandidate& t : triples) {
    if (t.min_abs <= 0) continue;
    int order[3] = {0, 1, 2};
    std::stable_sort(order, order + 3, [&](int a, int c) {
      return std::abs(t.val[a]) > std::abs(t.val[c]);
    });
    double m1 = std::abs(t.val[order[0]]);
    double m2 = std::abs(t.val[order[1]]);
    double m3 = std::abs(t.val[order[2]]);
    // per-party signs realizing the three pair signs; party 1 pinned to +
    std::vector<int> chi = {+1, sgn_of(t.val[2]), sgn_of(t.val[1])};
    append_two_character_block(d, b.shape, b.convention, {t.i, t.j, t.k}, chi, m2);
    append_u_terms(d, b.shape, t.pos[order[0]], sgn_of(t.val[order[0]]),
                   b.convention, m1 - m2);
    append_u_terms(d, b.shape, t.pos[order[2]], -sgn_of(t.val[order[2]]),
                   b.convention, m2 - m3);
    for (int q = 0; q < 3; ++q)
      isolated.insert(bloch_flat_index(b.shape, t.pos[q]));
    bonus += 2.0 * m3;
  }
  for (std::size_t f = 0; f < b.components.size(); ++f) {
    double v = b.components[f];
    if (v == 0 || isolated.count(f)) continue;
    append_u_terms(d, b.shape, bloch_multi_index(b.shape, f), sgn_of(v),
                   b.convention, std::abs(v));
  }
  double w0 = 1.0 - p_norm(b, 1.0) + bonus;
  if (w0 > 0) d.terms.emplace_back(w0, mixed_product(b.shape));
  return d;
}

std::optional<TripleCandidate> best_single_triple(const BlochVector& b) {
  std::optional<TripleCandidate> best;
  for (int i = 1; i <= b.shape.dims[0] * b.shape.dims[0] - 1; ++i)
    for (int j = 1; j <= b.shape.dims[1] * b.shape.dims[1] - 1; ++j)
      for (int k = 1; k <= b.shape.dims[2] * b.shape.dims[2] - 1; ++k) {
        TripleCandidate t = make_triple(b, i, j, k);
        if (!t.admissible) continue;
        if (!best || t.min_abs > best->min_abs) best = t;
      }
  return best;
}

// Three triples with pairwise-distinct i's, j's and k's maximizing the sum of
// their min components. Branch-and-bound over admissible candidates sorted by
// decreasing min (exhaustive at qubit ranges).
std::optional<std::vector<TripleCandidate>> best_triple_assignment(
    const BlochVector& b) {
  std::vector<TripleCandidate> cands;
  for (int i = 1; i <= b.shape.dims[0] * b.shape.dims[0] - 1; ++i)
    for (int j = 1; j <= b.shape.dims[1] * b.shape.dims[1] - 1; ++j)
      for (int k = 1; k <= b.shape.dims[2] * b.shape.dims[2] - 1; ++k) {
        TripleCandidate t = make_triple(b, i, j, k);
        if (t.admissible) cands.push_back(t);
      }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const TripleCandidate& a, const TripleCandidate& c) {
                     return a.min_abs > c.min_abs;
                   });
  std::optional<std::vector<TripleCandidate>> best;
  double best_sum = -1;
  std::vector<TripleCandidate> picked;
  std::uint32_t used_i = 0, used_j = 0, used_k = 0;
  std::function<void(std::size_t, double)> rec = [&](std::size_t pos,
                                                     double sum) {
    if (picked.size() == 3) {
      if (sum > best_sum) {
        best_sum = sum;
        best = picked;
      }
      return;
    }
    for (std::size_t c = pos; c < cands.size(); ++c) {
      double remaining = (3 - picked.size()) * cands[c].min_abs;
      if (sum + remaining <= best_sum) return;  // sorted: no later c helps
      const TripleCandidate& t = cands[c];
      if ((used_i >> t.i) & 1 || (used_j >> t.j) & 1 || (used_k >> t.k) & 1)
        continue;
      used_i |= 1u << t.i; used_j |= 1u << t.j; used_k |= 1u << t.k;
      picked.push_back(t);
      rec(c + 1, sum + t.min_abs);
      picked.pop_back();
      used_i &= ~(1u << t.i); used_j &= ~(1u << t.j); used_k &= ~(1u << t.k);
    }
  };
  rec(0, 0);
  return best;
}

void require_convention(const BlochVector& b, Convention c, const char* who) {
  if (b.convention != c)
    throw UnsupportedConvention(std::string(who) + ": needs the " +
                                convention_name(c) + " representation");
}

void require_qubits(const BlochVector& b, int parties, const char* who) {
  if (!b.shape.all_qubits())
    throw std::invalid_argument(std::string(who) + ": qubit shapes only");
  if (parties > 0 && b.shape.parties() != parties)
    throw std::invalid_argument(std::string(who) + ": needs exactly " +
                                std::to_string(parties) + " parties");
}

}  // namespace

const CharacterTable& character_table(int N) {
  if (N < 1 || N > 12)
    throw std::invalid_argument("character_table: level must be in 1..12");
  std::lock_guard<std::mutex> lock(g_table_mutex);
  auto it = g_table_cache.find(N);
  if (it == g_table_cache.end())
    it = g_table_cache
             .emplace(N, std::make_shared<const CharacterTable>(
                             make_character_table(N)))
             .first;
  return *it->second;
}

Matrix expand(const ProductState& ps) { return kron(ps.locals); }

Matrix reconstruct(const SeparableDecomposition& d) {
  long n = d.target_shape.total();
  Matrix acc = Matrix::Zero(n, n);
  for (const auto& [w, ps] : d.terms) acc += w * expand(ps);
  return acc;
}

VerifyReport verify_decomposition(const SeparableDecomposition& d,
                                  const Matrix& target, double tol) {
  VerifyReport r;
  r.min_weight = d.terms.empty() ? 0.0 : d.terms.front().first;
  for (const auto& [w, ps] : d.terms) {
    r.weight_sum += w;
    r.min_weight = std::min(r.min_weight, w);
    if (static_cast<int>(ps.locals.size()) != d.target_shape.parties()) {
      r.violations.push_back("product state has wrong number of factors");
      continue;
    }
    for (int k = 0; k < d.target_shape.parties(); ++k) {
      SystemShape local({d.target_shape.dims[k]});
      if (auto err = density_error(ps.locals[k], local, tol))
        r.violations.push_back("factor for party " + std::to_string(k + 1) +
                               ": " + err->message);
    }
  }
  if (r.min_weight < -1e-12)
    r.violations.push_back("negative weight " + std::to_string(r.min_weight));
  if (std::abs(r.weight_sum - 1.0) > tol)
    r.violations.push_back("weights sum to " + std::to_string(r.weight_sum));
  if (target.rows() != d.target_shape.total())
    r.violations.push_back("target dimension mismatch");
  else {
    r.frobenius_distance = (reconstruct(d) - target).norm();
    if (r.frobenius_distance > tol)
      r.violations.push_back("reconstruction distance " +
                             std::to_string(r.frobenius_distance));
  }
  r.ok = r.violations.empty();
  return r;
}

VerifyReport verify_decomposition(const SeparableDecomposition& d,
                                  const DensityMatrix& target, double tol) {
  if (!(target.shape == d.target_shape)) {
    VerifyReport r;
    r.violations.push_back("decomposition shape differs from target shape");
    return r;
  }
  return verify_decomposition(d, target.mat, tol);
}

SeparableDecomposition u_state_decomposition(const SystemShape& shape,
                                             const MultiIndex& idx, int sign,
                                             Convention c) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("u_state_decomposition: sign must be +-1");
  if (c == Convention::Prime)
    throw UnsupportedConvention("u_state_decomposition: no prime construction");
  if (static_cast<int>(idx.size()) != shape.parties())
    throw std::invalid_argument("u_state_decomposition: index arity mismatch");
  std::vector<int> active;
  for (int k = 0; k < shape.parties(); ++k) {
    int r = shape.dims[k] * shape.dims[k];
    if (idx[k] < 0 || idx[k] >= r)
      throw std::invalid_argument("u_state_decomposition: index out of range");
    if (idx[k] != 0) {
      if (c == Convention::Tilde && shape.dims[k] != 2)
        throw UnsupportedConvention(
            "u_state_decomposition: tilde construction needs qubit parties");
      active.push_back(k);
    }
  }
  if (active.empty())
    throw std::invalid_argument("u_state_decomposition: all-zero index");

  int m = static_cast<int>(active.size());
  double w = 1.0 / static_cast<double>(1 << (m - 1));
  SeparableDecomposition d{shape, {}};
  for (int mask = 0; mask < (1 << m); ++mask) {
    int prod = (std::popcount(static_cast<unsigned>(mask)) % 2 == 0) ? 1 : -1;
    if (prod != sign) continue;
    ProductState ps;
    int j = 0;
    for (int k = 0; k < shape.parties(); ++k) {
      int n = shape.dims[k];
      if (idx[k] == 0) {
        ps.locals.push_back(Matrix::Identity(n, n) / static_cast<double>(n));
      } else {
        int x = ((mask >> j) & 1) ? -1 : +1;
        Matrix B = local_basis_element(c, n, idx[k]);
        ps.locals.push_back(
            (Matrix::Identity(n, n) + static_cast<double>(x) * B) /
            static_cast<double>(n));
        ++j;
      }
    }
    d.terms.emplace_back(w, std::move(ps));
  }
  return d;
}

CertificateResult theorem3(const BlochVector& b, double decision_tol) {
  require_convention(b, Convention::Tilde, "theorem3");
  require_qubits(b, 0, "theorem3");
  CertificateResult out;
  out.verdict.criterion = "theorem3";
  out.verdict.lhs = p_norm(b, 1.0);
  out.verdict.bound = 1.0;
  if (out.verdict.lhs <= out.verdict.bound + decision_tol) {
    out.verdict.verdict = Verdict::SeparableCertified;
    out.decomposition = ball_decomposition(b);
  }
  return out;
}

CertificateResult theorem4(const BlochVector& b, double decision_tol) {
  require_convention(b, Convention::Tilde, "theorem4");
  require_qubits(b, 3, "theorem4");
  CertificateResult out;
  out.verdict.criterion = "theorem4";
  out.verdict.lhs = p_norm(b, 1.0);
  auto best = best_single_triple(b);
  if (!best) {
    out.verdict.bound = 0;
    out.verdict.detail["no_admissible_indices"] = 1;
    return out;
  }
  out.verdict.bound = 1.0 + 2.0 * best->min_abs;
  out.verdict.detail["min_component"] = best->min_abs;
  out.verdict.chosen_indices.push_back({best->i, best->j, best->k});
  if (out.verdict.lhs <= out.verdict.bound + decision_tol) {
    out.verdict.verdict = Verdict::SeparableCertified;
    out.decomposition = triple_decomposition(b, {*best});
  }
  return out;
}

CertificateResult theorem5(const BlochVector& b, double decision_tol) {
  require_convention(b, Convention::Tilde, "theorem5");
  require_qubits(b, 3, "theorem5");
  CertificateResult out;
  out.verdict.criterion = "theorem5";
  out.verdict.lhs = p_norm(b, 1.0);
  auto best = best_triple_assignment(b);
  if (!best) {
    out.verdict.bound = 0;
    out.verdict.detail["no_admissible_indices"] = 1;
    return out;
  }
  double sum = 0;
  for (const TripleCandidate& t : *best) {
    sum += t.min_abs;
    out.verdict.chosen_indices.push_back({t.i, t.j, t.k});
  }
  out.verdict.bound = 1.0 + 2.0 * sum;
  out.verdict.detail["sum_min"] = sum;
  if (out.verdict.lhs <= out.verdict.bound + decision_tol) {
    out.verdict.verdict = Verdict::SeparableCertified;
    out.decomposition = triple_decomposition(b, *best);
  }
  return out;
}

namespace {

// theorem6's seven linked positions for a tuple (i,j,k,l): the six pair
// patterns then the full tuple.
std::array<MultiIndex, 7> theorem6_positions(int i, int j, int k, int l) {
  return {MultiIndex{i, j, 0, 0}, MultiIndex{i, 0, k, 0},
          MultiIndex{i, 0, 0, l}, MultiIndex{0, j, k, 0},
          MultiIndex{0, j, 0, l}, MultiIndex{0, 0, k, l},
          MultiIndex{i, j, k, l}};
}

struct QuadCandidate {
  int i, j, k, l;
  std::array<MultiIndex, 7> pos;
  std::array<double, 7> val;
  std::array<int, 4> chi;  // per-party signs realizing the pattern
  double lessmid;
};

// The zero-adjusted pattern must be a character row: solve per-party signs
// and check the remaining products. Fails only around zero components.
std::optional<std::array<int, 4>> solve_pattern(const std::array<double, 7>& v) {
  int e[7];
  for (int q = 0; q < 7; ++q) e[q] = sgn_or_plus(v[q]);
  int a = 1, b = e[0], c = e[1], d = e[2];
  if (b * c != e[3] || b * d != e[4] || c * d != e[5] || a * b * c * d != e[6])
    return std::nullopt;
  return std::array<int, 4>{a, b, c, d};
}

}  // namespace

CertificateResult theorem6(const BlochVector& b, double decision_tol) {
  require_convention(b, Convention::Tilde, "theorem6");
  require_qubits(b, 4, "theorem6");
  CertificateResult out;
  out.verdict.criterion = "theorem6";
  out.verdict.lhs = p_norm(b, 1.0);

  std::optional<QuadCandidate> best;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) {
          QuadCandidate q{i, j, k, l, theorem6_positions(i, j, k, l), {}, {}, 0};
          int s[7];
          for (int t = 0; t < 7; ++t) {
            q.val[t] = b.at(q.pos[t]);
            s[t] = sgn_of(q.val[t]);
          }
          if (s[0] * s[1] * s[2] * s[3] * s[4] * s[5] * s[6] < 0) continue;
          if (s[0] * s[1] * s[3] < 0) continue;
          if (s[0] * s[2] * s[4] < 0) continue;
          if (s[1] * s[2] * s[5] < 0) continue;
          auto chi = solve_pattern(q.val);
          if (!chi) continue;
          q.chi = *chi;
          std::array<double, 7> mags;
          for (int t = 0; t < 7; ++t) mags[t] = std::abs(q.val[t]);
          std::sort(mags.begin(), mags.end());
          q.lessmid = mags[0] + mags[1] + mags[2];
          if (!best || q.lessmid > best->lessmid) best = q;
        }
  if (!best) {
    out.verdict.bound = 0;
    out.verdict.detail["no_admissible_indices"] = 1;
    return out;
  }
  out.verdict.bound = 1.0 + 2.0 * best->lessmid;
  out.verdict.detail["lessmid"] = best->lessmid;
  out.verdict.chosen_indices.push_back({best->i, best->j, best->k, best->l});
  if (out.verdict.lhs > out.verdict.bound + decision_tol) return out;

  out.verdict.verdict = Verdict::SeparableCertified;
  if (best->lessmid <= 0) {
    out.decomposition = ball_decomposition(b);
    return out;
  }
  SeparableDecomposition d{b.shape, {}};
  int order[7] = {0, 1, 2, 3, 4, 5, 6};
  std::stable_sort(order, order + 7, [&](int a, int c) {
    return std::abs(best->val[a]) > std::abs(best->val[c]);
  });
  double anchor = std::abs(best->val[order[3]]);
  std::vector<int> chi(best->chi.begin(), best->chi.end());
  append_two_character_block(d, b.shape, b.convention,
                             {best->i, best->j, best->k, best->l}, chi, anchor);
  for (int r = 0; r < 3; ++r) {
    int q = order[r];
    append_u_terms(d, b.shape, best->pos[q], sgn_or_plus(best->val[q]),
                   b.convention, std::abs(best->val[q]) - anchor);
  }
  for (int r = 4; r < 7; ++r) {
    int q = order[r];
    append_u_terms(d, b.shape, best->pos[q], -sgn_or_plus(best->val[q]),
                   b.convention, anchor - std::abs(best->val[q]));
  }
  std::set<std::size_t> isolated;
  for (int q = 0; q < 7; ++q)
    isolated.insert(bloch_flat_index(b.shape, best->pos[q]));
  for (std::size_t f = 0; f < b.components.size(); ++f) {
    double v = b.components[f];
    if (v == 0 || isolated.count(f)) continue;
    append_u_terms(d, b.shape, bloch_multi_index(b.shape, f), sgn_of(v),
                   b.convention, std::abs(v));
  }
  double w0 = 1.0 - out.verdict.lhs + 2.0 * best->lessmid;
  if (w0 > 0) d.terms.emplace_back(w0, mixed_product(b.shape));
  out.decomposition = std::move(d);
  return out;
}

CertificateResult theorem7(const BlochVector& b, double decision_tol) {
  require_convention(b, Convention::Check, "theorem7");
  CertificateResult out;
  out.verdict.criterion = "theorem7";
  out.verdict.lhs = p_norm(b, 1.0);

  int part = 1;
  double bound = 1.0;
  std::optional<TripleCandidate> part2;
  std::optional<std::vector<TripleCandidate>> part3;
  if (b.shape.parties() == 3) {
    if (auto t = best_single_triple(b); t && 1.0 + 2.0 * t->min_abs > bound) {
      part = 2;
      bound = 1.0 + 2.0 * t->min_abs;
      part2 = t;
    }
    if (auto a = best_triple_assignment(b)) {
      double sum = 0;
      for (const TripleCandidate& t : *a) sum += t.min_abs;
      if (1.0 + 2.0 * sum > bound) {
        part = 3;
        bound = 1.0 + 2.0 * sum;
        part3 = a;
      }
    }
  }
  out.verdict.bound = bound;
  out.verdict.detail["part"] = part;
  if (part == 2)
    out.verdict.chosen_indices.push_back({part2->i, part2->j, part2->k});
  if (part == 3)
    for (const TripleCandidate& t : *part3)
      out.verdict.chosen_indices.push_back({t.i, t.j, t.k});
  if (out.verdict.lhs > bound + decision_tol) return out;

  out.verdict.verdict = Verdict::SeparableCertified;
  if (part == 1)
    out.decomposition = ball_decomposition(b);
  else if (part == 2)
    out.decomposition = triple_decomposition(b, {*part2});
  else
    out.decomposition = triple_decomposition(b, *part3);
  return out;
}

GhzCompatible ghz_compatible_state(int N, const std::vector<int>& axes) {
  if (N < 2) throw std::invalid_argument("ghz_compatible_state: N >= 2");
  if (static_cast<int>(axes.size()) != N)
    throw std::invalid_argument("ghz_compatible_state: need one axis per party");
  for (int a : axes)
    if (a < 1 || a > 3)
      throw std::invalid_argument("ghz_compatible_state: axes must be 1..3");
  SystemShape shape{std::vector<int>(N, 2)};
  SeparableDecomposition d{shape, {}};
  append_two_character_block(d, shape, Convention::Tilde, axes,
                             std::vector<int>(N, +1), 1.0);
  Matrix m = reconstruct(d);
  GhzCompatible out{validate_density(m, shape, 1e-10), std::move(d)};
  return out;
}

}  // namespace blochsep
