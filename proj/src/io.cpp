#include "blochsep/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace blochsep {

std::string multi_index_key(const MultiIndex& idx) {
  std::ostringstream os;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) os << ',';
    os << idx[i];
  }
  return os.str();
}

MultiIndex parse_multi_index_key(const std::string& key, int parties) {
  MultiIndex idx;
  std::istringstream is(key);
  std::string part;
  while (std::getline(is, part, ',')) idx.push_back(std::stoi(part));
  if (static_cast<int>(idx.size()) != parties)
    throw std::invalid_argument("multi-index key '" + key + "' has " +
                                std::to_string(idx.size()) + " entries, need " +
                                std::to_string(parties));
  return idx;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (long i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (long j = 0; j < m.cols(); ++j)
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("matrix: expected a non-empty array of rows");
  long rows = static_cast<long>(j.size());
  long cols = static_cast<long>(j.at(0).size());
  Matrix m(rows, cols);
  for (long r = 0; r < rows; ++r) {
    const json& row = j.at(r);
    if (static_cast<long>(row.size()) != cols)
      throw std::invalid_argument("matrix: ragged rows");
    for (long c = 0; c < cols; ++c) {
      const json& e = row.at(c);
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("matrix: entries must be [re, im] pairs");
      m(r, c) = Cplx(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return m;
}

StateFile read_state_json(const json& j, double tol) {
  if (!j.contains("shape"))
    throw std::invalid_argument("state file: missing \"shape\"");
  SystemShape shape{j.at("shape").get<std::vector<int>>()};
  bool has_matrix = j.contains("matrix");
  bool has_bloch = j.contains("bloch");
  if (has_matrix == has_bloch)
    throw std::invalid_argument(
        "state file: need exactly one of \"matrix\" or \"bloch\"");
  if (has_matrix) {
    Matrix m = matrix_from_json(j.at("matrix"));
    return {validate_density(m, shape, tol), "matrix"};
  }
  const json& bj = j.at("bloch");
  BlochVector b;
  b.shape = shape;
  b.convention = convention_from_name(bj.at("convention").get<std::string>());
  b.components.assign(bloch_component_count(shape), 0.0);
  for (const auto& [key, value] : bj.at("components").items())
    b.at(parse_multi_index_key(key, shape.parties())) = value.get<double>();
  return {validate_density(from_bloch(b), shape, tol), "bloch"};
}

StateFile read_state_file(const std::string& path, double tol) {
  json j = json::parse(read_text_file(path));
  return read_state_json(j, tol);
}

json state_to_json(const DensityMatrix& rho) {
  json j;
  j["shape"] = rho.shape.dims;
  j["matrix"] = matrix_to_json(rho.mat);
  return j;
}

void write_state_file(const std::string& path, const DensityMatrix& rho) {
  write_text_file(path, state_to_json(rho).dump(2) + "\n");
}

json decomposition_to_json(const SeparableDecomposition& d) {
  json j;
  j["target_shape"] = d.target_shape.dims;
  json terms = json::array();
  for (const auto& [w, ps] : d.terms) {
    json term;
    term["weight"] = w;
    json locals = json::array();
    for (const Matrix& m : ps.locals) locals.push_back(matrix_to_json(m));
    term["locals"] = std::move(locals);
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

SeparableDecomposition decomposition_from_json(const json& j) {
  SeparableDecomposition d;
  d.target_shape = SystemShape{j.at("target_shape").get<std::vector<int>>()};
  for (const json& term : j.at("terms")) {
    ProductState ps;
    for (const json& local : term.at("locals"))
      ps.locals.push_back(matrix_from_json(local));
    d.terms.emplace_back(term.at("weight").get<double>(), std::move(ps));
  }
  return d;
}

json witness_to_json(const Witness& w) {
  json j;
  j["shape"] = w.shape.dims;
  j["mode"] = witness_mode_name(w.mode);
  j["offset_a"] = w.offset_a;
  j["matrix"] = matrix_to_json(w.matrix);
  json signs;
  for (const auto& [idx, s] : w.sign_pattern)
    if (s != 0) signs[multi_index_key(idx)] = s;
  j["sign_pattern"] = std::move(signs);
  return j;
}

json criterion_to_json(const CriterionResult& r) {
  json j;
  j["name"] = r.criterion;
  j["verdict"] = verdict_name(r.verdict);
  j["lhs"] = r.lhs;
  j["bound"] = r.bound;
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (!r.chosen_indices.empty()) {
    json chosen = json::array();
    for (const MultiIndex& idx : r.chosen_indices) chosen.push_back(idx);
    j["chosen_indices"] = std::move(chosen);
  }
  return j;
}

json report_to_json(const Analysis& a, const json& input_info) {
  json j;
  j["input"] = input_info;
  j["input"]["shape"] = a.shape.dims;
  j["input"]["dimension"] = a.shape.total();
  j["bloch"] = {{"norm1", a.bloch_norm1},
                {"correlation_norm1", a.correlation_norm1},
                {"nonzero_components", a.nonzero_components}};
  json crits = json::array();
  for (const CriterionResult& r : a.criteria)
    crits.push_back(criterion_to_json(r));
  j["criteria"] = std::move(crits);
  if (a.oracle_ran) {
    json cuts = json::array();
    for (const PptRecord& rec : a.oracle)
      cuts.push_back({{"parties", rec.parties},
                      {"min_eigenvalue", rec.min_eigenvalue},
                      {"ppt", rec.ppt}});
    j["oracle"] = {{"bipartitions", std::move(cuts)},
                   {"all_ppt", a.oracle_all_ppt}};
  }
  j["overall"] = verdict_name(a.overall);
  j["consistent"] = a.consistent;
  if (!a.certifying_criterion.empty())
    j["certified_by"] = a.certifying_criterion;
  if (a.decomposition) {
    j["decomposition"] = decomposition_to_json(*a.decomposition);
    j["decomposition"]["certified_by"] = a.certifying_criterion;
  }
  return j;
}

int exit_code_of(Verdict v) {
  switch (v) {
    case Verdict::SeparableCertified: return 0;
    case Verdict::Entangled: return 1;
    case Verdict::Inconclusive: return 2;
  }
  return 4;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace blochsep
