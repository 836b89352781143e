#ifndef BLOCHSEP_IO_HPP
#define BLOCHSEP_IO_HPP

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "blochsep/analysis.hpp"
#include "blochsep/witness.hpp"

// Plain-text file formats: StateFile (matrix or Bloch form), analysis
// reports, decompositions, witnesses. Multi-index keys serialize as
// comma-joined decimal integers ("0,3,3"), unambiguous for mixed local
// dimensions. Reports are deterministic functions of their inputs.

namespace blochsep {

using json = nlohmann::json;

std::string multi_index_key(const MultiIndex& idx);
MultiIndex parse_multi_index_key(const std::string& key, int parties);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

/// StateFile carries a shape plus exactly one of:
///   "matrix": n x n array of [re, im] pairs
///   "bloch":  {"convention": tag, "components": {"i1,...,iN": value}}
/// Bloch form is reconstructed through from_bloch and then validated.
struct StateFile {
  DensityMatrix state;
  std::string form;  // "matrix" or "bloch"
};

StateFile read_state_json(const json& j, double tol = kDefaultValidationTol);
StateFile read_state_file(const std::string& path,
                          double tol = kDefaultValidationTol);
json state_to_json(const DensityMatrix& rho);
void write_state_file(const std::string& path, const DensityMatrix& rho);

json decomposition_to_json(const SeparableDecomposition& d);
SeparableDecomposition decomposition_from_json(const json& j);

json witness_to_json(const Witness& w);

json criterion_to_json(const CriterionResult& r);
json report_to_json(const Analysis& a, const json& input_info);

int exit_code_of(Verdict v);  // 0 certified, 1 entangled, 2 inconclusive

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace blochsep

#endif
