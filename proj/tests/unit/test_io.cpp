#include <doctest.h>

#include <nlohmann/json.hpp>

#include "blochsep/catalog.hpp"
#include "blochsep/io.hpp"
#include "support/test_helpers.hpp"

using namespace blochsep;

TEST_CASE("multi-index keys") {
  CHECK(multi_index_key({0, 3, 3}) == "0,3,3");
  CHECK(parse_multi_index_key("0,3,3", 3) == MultiIndex{0, 3, 3});
  CHECK_THROWS_AS(parse_multi_index_key("0,3", 3), std::invalid_argument);
}

TEST_CASE("matrix-form state files round-trip") {
  DensityMatrix rho = noisy_ghz(3, 0.2);
  json j = state_to_json(rho);
  StateFile sf = read_state_json(j);
  CHECK(sf.form == "matrix");
  CHECK(sf.state.shape == rho.shape);
  CHECK((sf.state.mat - rho.mat).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("bloch-form state files reconstruct and validate") {
  json j;
  j["shape"] = {2, 2};
  j["bloch"]["convention"] = "tilde";
  j["bloch"]["components"] = {{"3,3", 0.5}};
  StateFile sf = read_state_json(j);
  CHECK(sf.form == "bloch");
  Matrix expected =
      (identity(4) + 0.5 * kron(blochsep::testing::pauli(3),
                                blochsep::testing::pauli(3))) / 4.0;
  CHECK((sf.state.mat - expected).cwiseAbs().maxCoeff() < 1e-14);

  // reconstruction that is not a state must be rejected with the invariant
  j["bloch"]["components"] = {{"3,3", 5.0}};
  CHECK_THROWS_AS(read_state_json(j), DensityValidationError);

  // non-qubit shapes take the check or prime tags
  json q3;
  q3["shape"] = {3};
  q3["bloch"]["convention"] = "check";
  q3["bloch"]["components"] = {{"1", 0.5}};
  StateFile qutrit = read_state_json(q3);
  Matrix want = (identity(3) + 0.5 * basis_element(SystemShape{{3}},
                                                   Convention::Check, {1})) /
                3.0;
  CHECK((qutrit.state.mat - want).cwiseAbs().maxCoeff() < 1e-14);

  json both = state_to_json(noisy_ghz(2, 0.1));
  both["bloch"] = {{"convention", "tilde"}, {"components", json::object()}};
  CHECK_THROWS_AS(read_state_json(both), std::invalid_argument);

  json neither;
  neither["shape"] = {2, 2};
  CHECK_THROWS_AS(read_state_json(neither), std::invalid_argument);
}

TEST_CASE("decomposition payloads re-verify after a serialization round trip") {
  DensityMatrix rho = noisy_ghz(3, 0.15);
  Analysis a = analyze(rho);
  REQUIRE(a.decomposition.has_value());
  json j = decomposition_to_json(*a.decomposition);
  SeparableDecomposition loaded = decomposition_from_json(j);
  CHECK(verify_decomposition(loaded, rho, 1e-9).ok);
}

TEST_CASE("reports are deterministic and carry the pipeline verdicts") {
  DensityMatrix rho = noisy_ghz(3, 0.15);
  json input_info = {{"path", "x"}, {"form", "matrix"}, {"validation_tol", 1e-9}};
  json r1 = report_to_json(analyze(rho), input_info);
  json r2 = report_to_json(analyze(rho), input_info);
  CHECK(r1.dump() == r2.dump());

  CHECK(r1.at("overall") == "separable_certified");
  CHECK(r1.at("certified_by") == "theorem4");
  CHECK(r1.at("consistent") == true);
  CHECK(r1.at("oracle").at("all_ppt") == true);
  bool saw_theorem2 = false;
  for (const json& c : r1.at("criteria"))
    if (c.at("name") == "theorem2") {
      saw_theorem2 = true;
      // correlation tensor of noisy GHZ3: four entries of magnitude alpha
      CHECK(c.at("lhs").get<double>() ==
            doctest::Approx(4 * 0.15).epsilon(1e-12));
      CHECK(c.at("verdict") == "inconclusive");
    }
  CHECK(saw_theorem2);
}

TEST_CASE("witness payload carries the sign pattern under comma keys") {
  DensityMatrix rho = state_A(0.4);
  Witness w = build_witness(to_bloch(rho, Convention::Tilde), 1.0,
                            WitnessMode::CorrelationOnly);
  json j = witness_to_json(w);
  CHECK(j.at("sign_pattern").size() == 2);
  CHECK(j.at("sign_pattern").at("1,3,1") == 1);
  CHECK(j.at("sign_pattern").at("2,2,2") == 1);
  CHECK(j.at("mode") == "correlation_only");
}

TEST_CASE("exit codes follow the verdict contract") {
  CHECK(exit_code_of(Verdict::SeparableCertified) == 0);
  CHECK(exit_code_of(Verdict::Entangled) == 1);
  CHECK(exit_code_of(Verdict::Inconclusive) == 2);
}
