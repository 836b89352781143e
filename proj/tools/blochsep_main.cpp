// blochsep — separability certification from generalized Bloch
// representations. Subcommands: analyze, scan, witness, catalog.
//
// Exit codes: 0 separable certified, 1 entangled, 2 inconclusive,
// 3 usage/input error, 4 internal inconsistency.

#include <atomic>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "blochsep/analysis.hpp"
#include "blochsep/catalog.hpp"
#include "blochsep/io.hpp"
#include "blochsep/sweep.hpp"
#include "blochsep/witness.hpp"

namespace {

using namespace blochsep;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

SystemShape parse_shape(const std::string& spec) {
  std::vector<int> dims;
  std::istringstream is(spec);
  std::string part;
  while (std::getline(is, part, ',')) dims.push_back(std::stoi(part));
  return SystemShape{dims};
}

std::map<std::string, double> parse_params(
    const std::vector<std::string>& sets) {
  std::map<std::string, double> params;
  for (const std::string& s : sets) {
    auto eq = s.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--set expects name=value, got: " + s);
    params[s.substr(0, eq)] = std::stod(s.substr(eq + 1));
  }
  return params;
}

struct ScanGrid {
  std::string param;
  double lo = 0, hi = 0;
  int points = 0;
};

ScanGrid parse_grid(const std::string& spec) {
  auto eq = spec.find('=');
  if (eq == std::string::npos)
    throw CLI::ValidationError("--grid expects name=lo:hi:points");
  ScanGrid g;
  g.param = spec.substr(0, eq);
  std::istringstream is(spec.substr(eq + 1));
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(is, part, ':')) parts.push_back(part);
  if (parts.size() != 3)
    throw CLI::ValidationError("--grid expects name=lo:hi:points");
  g.lo = std::stod(parts[0]);
  g.hi = std::stod(parts[1]);
  g.points = std::stoi(parts[2]);
  return g;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_text_file(out_path, content);
}

// ---------------------------------------------------------------------------

struct AnalyzeArgs {
  std::string input;
  double tol = kDefaultValidationTol;
  std::vector<double> p_values;
  std::string criteria;
  std::string shape_override;
  std::string report_path;
  std::string witness_a;  // when set, embed a witness payload
  std::string witness_mode = "full";
  bool no_oracle = false;
  bool no_decomposition = false;
};

double resolve_offset(const std::string& a_spec, const BlochVector& tilde) {
  if (a_spec == "theorem1") return witness_offset_theorem1(tilde.shape);
  if (a_spec == "theorem2")
    return theorem2_M(sign_tensor(correlation_tensor(tilde)));
  if (a_spec == "theorem3") return 1.0;
  return std::stod(a_spec);
}

WitnessMode resolve_mode(const std::string& mode_name) {
  if (mode_name == "full") return WitnessMode::FullNorm;
  if (mode_name == "correlation") return WitnessMode::CorrelationOnly;
  throw CLI::ValidationError("--mode must be full or correlation");
}

AnalysisOptions options_from(const AnalyzeArgs& a) {
  AnalysisOptions opt;
  if (!a.p_values.empty()) opt.p_values = a.p_values;
  if (!a.criteria.empty()) {
    std::istringstream is(a.criteria);
    std::string name;
    while (std::getline(is, name, ',')) opt.criteria.insert(name);
  }
  opt.run_oracle = !a.no_oracle;
  opt.want_decomposition = !a.no_decomposition;
  return opt;
}

int run_analyze(const AnalyzeArgs& args) {
  StateFile sf = read_state_file(args.input, args.tol);
  DensityMatrix rho = sf.state;
  if (!args.shape_override.empty())
    rho = reshape(rho, parse_shape(args.shape_override));
  Analysis a = analyze(rho, options_from(args));
  json input_info = {{"path", args.input},
                     {"form", sf.form},
                     {"validation_tol", args.tol}};
  json report = report_to_json(a, input_info);
  if (!args.witness_a.empty()) {
    BlochVector tilde = to_bloch(rho, Convention::Tilde);
    Witness w = build_witness(tilde, resolve_offset(args.witness_a, tilde),
                              resolve_mode(args.witness_mode));
    json wj = witness_to_json(w);
    wj["evaluation"] = evaluate_witness(w, rho);
    report["witness"] = std::move(wj);
  }
  emit(args.report_path, report.dump(2) + "\n");
  if (!args.report_path.empty())
    std::cout << "overall: " << verdict_name(a.overall) << "\n";
  if (!a.consistent) return 4;
  return exit_code_of(a.overall);
}

// ---------------------------------------------------------------------------

struct ScanRow {
  double value;
  std::vector<CriterionResult> results;
};

std::vector<CriterionResult> scan_point(const std::string& family,
                                        std::map<std::string, double> params,
                                        const std::string& shape_override,
                                        const AnalysisOptions& base,
                                        bool want_ppt) {
  DensityMatrix rho = build_catalog_state(family, params);
  if (!shape_override.empty()) rho = reshape(rho, parse_shape(shape_override));
  AnalysisOptions opt = base;
  opt.run_oracle = false;
  opt.want_decomposition = false;
  Analysis a = analyze(rho, opt);
  std::vector<CriterionResult> results = a.criteria;
  if (want_ppt) {
    CriterionResult ppt;
    ppt.criterion = "ppt";
    double lo = 0;
    for (const auto& cut : bipartition_cuts(rho.shape.parties()))
      lo = std::min(lo, ppt_min_eigenvalue(rho, cut));
    ppt.lhs = lo < 0 ? -lo : 0.0;  // violation magnitude
    ppt.bound = 1e-10;
    ppt.verdict = lo < -1e-10 ? Verdict::Entangled : Verdict::Inconclusive;
    results.push_back(std::move(ppt));
  }
  return results;
}

int run_scan(const std::string& family, const std::string& grid_spec,
             const std::vector<std::string>& sets,
             const std::string& criteria, const std::vector<double>& p_values,
             const std::string& bisect, const std::string& shape_override,
             const std::string& out_path) {
  ScanGrid grid = parse_grid(grid_spec);
  std::map<std::string, double> fixed = parse_params(sets);
  AnalysisOptions base;
  if (!p_values.empty()) base.p_values = p_values;
  bool want_ppt = false;
  if (!criteria.empty()) {
    std::istringstream is(criteria);
    std::string name;
    while (std::getline(is, name, ',')) {
      if (name == "ppt")
        want_ppt = true;
      else
        base.criteria.insert(name);
    }
    if (base.criteria.empty() && want_ppt)
      base.criteria.insert("__none__");  // ppt only
  }

  // grid points are independent pure evaluations; rows keep grid order
  std::vector<double> values = linspace(grid.lo, grid.hi, grid.points);
  std::vector<ScanRow> rows(values.size());
  unsigned workers = std::max(1u, std::min<unsigned>(
                                      std::thread::hardware_concurrency(),
                                      static_cast<unsigned>(values.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < values.size();
         i = next.fetch_add(1)) {
      std::map<std::string, double> params = fixed;
      params[grid.param] = values[i];
      rows[i] = {values[i],
                 scan_point(family, params, shape_override, base, want_ppt)};
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  std::ostringstream csv;
  csv << grid.param;
  for (const CriterionResult& r : rows.front().results)
    csv << ',' << r.criterion << "_lhs," << r.criterion << "_bound,"
        << r.criterion << "_verdict";
  csv << '\n';
  for (const ScanRow& row : rows) {
    csv << fmt(row.value);
    for (const CriterionResult& r : row.results)
      csv << ',' << fmt(r.lhs) << ',' << fmt(r.bound) << ','
          << verdict_name(r.verdict);
    csv << '\n';
  }

  if (!bisect.empty()) {
    bool known = false;
    for (const CriterionResult& r : rows.front().results)
      known = known || r.criterion == bisect;
    if (!known)
      throw std::invalid_argument("--bisect: criterion '" + bisect +
                                  "' not in scan output");
    // localize every verdict flip of the chosen criterion to 1e-9
    auto verdict_at = [&](double v) {
      std::map<std::string, double> params = fixed;
      params[grid.param] = v;
      auto results = scan_point(family, params, shape_override, base, want_ppt);
      for (const CriterionResult& r : results)
        if (r.criterion == bisect) return r.verdict;
      throw std::invalid_argument("--bisect: criterion '" + bisect +
                                  "' not in scan output");
    };
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
      Verdict a = Verdict::Inconclusive, b = Verdict::Inconclusive;
      for (const CriterionResult& r : rows[i].results)
        if (r.criterion == bisect) a = r.verdict;
      for (const CriterionResult& r : rows[i + 1].results)
        if (r.criterion == bisect) b = r.verdict;
      if (a == b) continue;
      double flip = bisect_flip(
          [&](double v) { return verdict_at(v) == a; }, rows[i].value,
          rows[i + 1].value, 1e-9);
      csv << "# bisect," << bisect << ',' << fmt(flip) << '\n';
    }
  }
  emit(out_path, csv.str());
  return 0;
}

// ---------------------------------------------------------------------------

int run_witness(const std::string& input, double tol, const std::string& a_spec,
                const std::string& mode_name, int random_count,
                std::uint64_t seed, const std::string& out_path) {
  StateFile sf = read_state_file(input, tol);
  const DensityMatrix& rho = sf.state;
  BlochVector tilde = to_bloch(rho, Convention::Tilde);
  WitnessMode mode = resolve_mode(mode_name);
  double a = resolve_offset(a_spec, tilde);

  json out;
  out["input"] = {{"path", input}, {"shape", rho.shape.dims}};
  if (random_count > 0) {
    json list = json::array();
    double norm1 = p_norm(tilde, 1.0);
    for (const Witness& w :
         random_sign_witnesses(rho.shape, a, random_count, seed)) {
      json wj = witness_to_json(w);
      wj["evaluation"] = evaluate_witness(w, rho);
      list.push_back(std::move(wj));
    }
    out["witnesses"] = std::move(list);
    out["norm1_minus_a"] = norm1 - a;
    out["seed"] = seed;
  } else {
    Witness w = build_witness(tilde, a, mode);
    out = witness_to_json(w);
    out["evaluation"] = evaluate_witness(w, rho);
    out["norm_value"] = mode == WitnessMode::FullNorm
                            ? p_norm(tilde, 1.0)
                            : p_norm(correlation_tensor(tilde), 1.0);
  }
  emit(out_path, out.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------------------

int run_catalog(const std::string& name, const std::vector<std::string>& sets,
                const std::string& out_path) {
  DensityMatrix rho = build_catalog_state(name, parse_params(sets));
  json j = state_to_json(rho);
  emit(out_path, j.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Certify full separability or detect entanglement of multipartite "
      "quantum states via generalized Bloch representations"};
  app.require_subcommand(1);

  AnalyzeArgs aa;
  auto* analyze_cmd = app.add_subcommand(
      "analyze", "Run the criteria pipeline on a state file");
  analyze_cmd->add_option("input", aa.input, "StateFile (JSON)")->required();
  analyze_cmd->add_option("--tol", aa.tol, "density validation tolerance");
  analyze_cmd->add_option("--p", aa.p_values, "theorem1 exponent (repeatable)");
  analyze_cmd->add_option("--criteria", aa.criteria,
                          "comma-separated criteria subset");
  analyze_cmd->add_option("--shape-override", aa.shape_override,
                          "reinterpret under this shape, e.g. 2,2,2");
  analyze_cmd->add_option("--report", aa.report_path, "write report here");
  analyze_cmd->add_option("--emit-witness", aa.witness_a,
                          "embed a witness payload; number or "
                          "theorem1|theorem2|theorem3");
  analyze_cmd->add_option("--witness-mode", aa.witness_mode,
                          "full | correlation");
  analyze_cmd->add_flag("--no-oracle", aa.no_oracle, "skip the PPT cross-check");
  analyze_cmd->add_flag("--no-decomposition", aa.no_decomposition,
                        "omit the decomposition payload");

  std::string family, grid_spec, criteria, bisect, shape_override, out_path;
  std::vector<std::string> sets;
  std::vector<double> p_values;
  auto* scan_cmd =
      app.add_subcommand("scan", "Sweep a catalog family over a grid (CSV)");
  scan_cmd->add_option("--family", family, "catalog family")->required();
  scan_cmd->add_option("--grid", grid_spec, "param=lo:hi:points")->required();
  scan_cmd->add_option("--set", sets, "fixed parameter name=value");
  scan_cmd->add_option("--criteria", criteria, "comma-separated criteria");
  scan_cmd->add_option("--p", p_values, "theorem1 exponent (repeatable)");
  scan_cmd->add_option("--bisect", bisect,
                       "localize this criterion's verdict flips to 1e-9");
  scan_cmd->add_option("--shape-override", shape_override,
                       "reinterpret under this shape");
  scan_cmd->add_option("-o,--output", out_path, "CSV path (default stdout)");

  std::string w_input, w_a = "theorem3", w_mode = "full", w_out;
  double w_tol = kDefaultValidationTol;
  int w_random = 0;
  std::uint64_t w_seed = 0;
  auto* witness_cmd = app.add_subcommand(
      "witness", "Build a witness operator for a state file");
  witness_cmd->add_option("input", w_input, "StateFile (JSON)")->required();
  witness_cmd->add_option("--tol", w_tol, "density validation tolerance");
  witness_cmd->add_option("--a", w_a,
                          "offset: number or theorem1|theorem2|theorem3");
  witness_cmd->add_option("--mode", w_mode, "full | correlation");
  witness_cmd->add_option("--random", w_random,
                          "emit this many random-sign witnesses instead");
  witness_cmd->add_option("--seed", w_seed, "random-sign seed");
  witness_cmd->add_option("-o,--output", w_out, "output path (default stdout)");

  std::string c_name, c_out;
  std::vector<std::string> c_sets;
  auto* catalog_cmd =
      app.add_subcommand("catalog", "Write a catalog state as a StateFile");
  catalog_cmd->add_option("family", c_name, "catalog family")->required();
  catalog_cmd->add_option("--set", c_sets, "parameter name=value");
  catalog_cmd->add_option("-o,--output", c_out, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) return run_analyze(aa);
    if (*scan_cmd)
      return run_scan(family, grid_spec, sets, criteria, p_values, bisect,
                      shape_override, out_path);
    if (*witness_cmd)
      return run_witness(w_input, w_tol, w_a, w_mode, w_random, w_seed, w_out);
    if (*catalog_cmd) return run_catalog(c_name, c_sets, c_out);
  } catch (const DensityValidationError& e) {
    std::cerr << "error: invalid state: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
