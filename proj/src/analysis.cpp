#include "blochsep/analysis.hpp"

#include <sstream>

namespace blochsep {

const std::vector<std::string>& criterion_names() {
  static const std::vector<std::string> names = {
      "theorem1", "theorem2", "theorem3", "theorem4",
      "theorem5", "theorem6", "theorem7"};
  return names;
}

namespace {

std::string theorem1_label(double p) {
  std::ostringstream os;
  os << "theorem1_p" << p;
  return os.str();
}

}  // namespace

Analysis analyze(const DensityMatrix& rho, const AnalysisOptions& opt) {
  Analysis out;
  out.shape = rho.shape;

  BlochVector tilde = to_bloch(rho, Convention::Tilde);
  CorrelationTensor corr = correlation_tensor(tilde);
  out.bloch_norm1 = p_norm(tilde, 1.0);
  out.correlation_norm1 = p_norm(corr, 1.0);
  for (double v : tilde.components)
    if (v != 0) ++out.nonzero_components;

  if (opt.wants("theorem1"))
    for (double p : opt.p_values) {
      CriterionResult r = theorem1_check(corr, p, opt.decision_tol);
      r.criterion = theorem1_label(p);
      out.criteria.push_back(std::move(r));
    }
  if (opt.wants("theorem2") && rho.shape.parties() >= 2)
    out.criteria.push_back(theorem2_check(corr, opt.decision_tol));

  double best_cert_bound = -1;
  auto take = [&](CertificateResult&& cert) {
    if (cert.verdict.verdict == Verdict::SeparableCertified &&
        cert.verdict.bound > best_cert_bound) {
      best_cert_bound = cert.verdict.bound;
      out.certifying_criterion = cert.verdict.criterion;
      if (opt.want_decomposition)
        out.decomposition = std::move(cert.decomposition);
    }
    out.criteria.push_back(std::move(cert.verdict));
  };

  if (rho.shape.all_qubits()) {
    if (opt.wants("theorem3")) take(theorem3(tilde, opt.decision_tol));
    if (rho.shape.parties() == 3) {
      if (opt.wants("theorem4")) take(theorem4(tilde, opt.decision_tol));
      if (opt.wants("theorem5")) take(theorem5(tilde, opt.decision_tol));
    }
    if (rho.shape.parties() == 4 && opt.wants("theorem6"))
      take(theorem6(tilde, opt.decision_tol));
  } else if (opt.wants("theorem7")) {
    BlochVector check = to_bloch(rho, Convention::Check);
    take(theorem7(check, opt.decision_tol));
  }

  bool any_certified = false, any_entangled = false;
  for (const CriterionResult& r : out.criteria) {
    any_certified = any_certified || r.verdict == Verdict::SeparableCertified;
    any_entangled = any_entangled || r.verdict == Verdict::Entangled;
  }
  out.overall = any_certified   ? Verdict::SeparableCertified
                : any_entangled ? Verdict::Entangled
                                : Verdict::Inconclusive;
  out.consistent = !(any_certified && any_entangled);

  if (opt.run_oracle && rho.shape.parties() >= 2) {
    out.oracle_ran = true;
    for (const auto& cut : bipartition_cuts(rho.shape.parties())) {
      PptRecord rec;
      rec.parties = cut;
      rec.min_eigenvalue = ppt_min_eigenvalue(rho, cut);
      rec.ppt = rec.min_eigenvalue >= -1e-10;
      out.oracle_all_ppt = out.oracle_all_ppt && rec.ppt;
      out.oracle.push_back(std::move(rec));
    }
    if (any_certified && !out.oracle_all_ppt) out.consistent = false;
  }
  return out;
}

}  // namespace blochsep
