#include "blochsep/criteria.hpp"

#include <cmath>

namespace blochsep {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Entangled: return "entangled";
    case Verdict::SeparableCertified: return "separable_certified";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

SignTensor sign_tensor(const CorrelationTensor& t) {
  SignTensor s;
  s.shape = t.shape;
  s.entries.resize(t.values.size());
  for (std::size_t i = 0; i < t.values.size(); ++i)
    s.entries[i] = (t.values[i] > 0) - (t.values[i] < 0);
  return s;
}

CriterionResult theorem1_check(const CorrelationTensor& t, double p,
                               double decision_tol) {
  if (!std::isinf(p) && p < 1.0)
    throw std::invalid_argument("theorem1_check: requires p >= 1");
  double bound = 1.0;
  if (p <= 2.0) {
    bound = 1.0;
    for (int d : t.shape.dims)
      bound *= std::pow(static_cast<double>(d) * d - 1.0, 1.0 / p - 0.5);
  }
  CriterionResult r;
  r.criterion = "theorem1";
  r.lhs = p_norm(t, p);
  r.bound = bound;
  r.detail["p"] = p;
  r.verdict =
      (r.lhs > bound + decision_tol) ? Verdict::Entangled : Verdict::Inconclusive;
  return r;
}

double theorem2_M(const SignTensor& t) {
  int N = t.shape.parties();
  if (N < 2)
    throw std::invalid_argument("theorem2_M: needs at least 2 parties");
  double M = 0;
  for (int k = 0; k < N; ++k) {
    int m = t.shape.dims[k] * t.shape.dims[k] - 1;
    std::vector<long> count(m + 1, 0);
    for (std::size_t f = 0; f < t.entries.size(); ++f)
      if (t.entries[f] != 0)
        count[corr_multi_index(t.shape, f)[k]] += 1;
    long best = 0;
    for (int a = 1; a <= m; ++a) best = std::max(best, count[a]);
    M += static_cast<double>(best);
  }
  return M / N;
}

CriterionResult theorem2_check(const CorrelationTensor& t,
                               double decision_tol) {
  CriterionResult r;
  r.criterion = "theorem2";
  r.lhs = p_norm(t, 1.0);
  r.bound = theorem2_M(sign_tensor(t));
  r.detail["M"] = r.bound;
  r.verdict = (r.lhs > r.bound + decision_tol) ? Verdict::Entangled
                                               : Verdict::Inconclusive;
  return r;
}

}  // namespace blochsep
