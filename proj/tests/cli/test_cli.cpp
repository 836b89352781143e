#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "blochsep/analysis.hpp"
#include "blochsep/catalog.hpp"
#include "blochsep/io.hpp"

using namespace blochsep;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(BLOCHSEP_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe))
    out.append(buf, got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "blochsep_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("catalog then analyze reproduces the in-process pipeline") {
  fs::path state = scratch_dir() / "ghz3_015.json";
  RunResult cat = run("catalog noisy_ghz --set N=3 --set alpha=0.15 -o " +
                      state.string());
  CHECK(cat.exit_code == 0);

  RunResult an = run("analyze " + state.string());
  CHECK(an.exit_code == 0);  // separable certified
  json report = json::parse(an.out);
  CHECK(report.at("overall") == "separable_certified");
  CHECK(report.at("certified_by") == "theorem4");
  CHECK(report.at("consistent") == true);

  // bit-for-bit agreement with the in-process run
  Analysis direct = analyze(noisy_ghz(3, 0.15));
  for (const json& c : report.at("criteria")) {
    bool found = false;
    for (const CriterionResult& r : direct.criteria)
      if (r.criterion == c.at("name")) {
        found = true;
        CHECK(c.at("lhs").get<double>() == r.lhs);
        CHECK(c.at("bound").get<double>() == r.bound);
        CHECK(c.at("verdict").get<std::string>() == verdict_name(r.verdict));
      }
    CHECK(found);
  }

  // the embedded decomposition re-verifies on load
  REQUIRE(report.contains("decomposition"));
  SeparableDecomposition d =
      decomposition_from_json(report.at("decomposition"));
  CHECK(verify_decomposition(d, noisy_ghz(3, 0.15), 1e-9).ok);
}

TEST_CASE("analyze exit codes track the verdict") {
  fs::path dir = scratch_dir();
  fs::path entangled = dir / "ghz3_06.json";
  run("catalog noisy_ghz --set N=3 --set alpha=0.6 -o " + entangled.string());
  CHECK(run("analyze " + entangled.string()).exit_code == 1);

  fs::path gap = dir / "ghz3_021.json";
  run("catalog noisy_ghz --set N=3 --set alpha=0.21 -o " + gap.string());
  RunResult r = run("analyze " + gap.string());
  CHECK(r.exit_code == 2);  // no Bloch criterion fires in the gap
  json report = json::parse(r.out);
  CHECK(report.at("oracle").at("all_ppt") == false);  // the cross-check sees NPT

  CHECK(run("analyze " + (dir / "missing.json").string()).exit_code == 3);
  CHECK(run("catalog werner -o /dev/null").exit_code == 3);
}

TEST_CASE("invalid state files are rejected with exit 3") {
  fs::path bad = scratch_dir() / "bad.json";
  json j;
  j["shape"] = {2, 2};
  j["bloch"] = {{"convention", "tilde"}, {"components", {{"3,3", 5.0}}}};
  write_text_file(bad.string(), j.dump());
  CHECK(run("analyze " + bad.string()).exit_code == 3);
}

TEST_CASE("witness subcommand emits the identity and a deterministic family") {
  fs::path dir = scratch_dir();
  fs::path state = dir / "ghz3_03.json";
  run("catalog noisy_ghz --set N=3 --set alpha=0.3 -o " + state.string());

  RunResult w = run("witness " + state.string() + " --a theorem3 --mode full");
  CHECK(w.exit_code == 0);
  json wj = json::parse(w.out);
  CHECK(wj.at("offset_a") == 1.0);
  CHECK(wj.at("evaluation").get<double>() ==
        doctest::Approx(7 * 0.3 - 1.0).epsilon(1e-10));
  CHECK(wj.at("norm_value").get<double>() ==
        doctest::Approx(7 * 0.3).epsilon(1e-10));

  RunResult r1 = run("witness " + state.string() + " --a 1 --random 64 --seed 1");
  RunResult r2 = run("witness " + state.string() + " --a 1 --random 64 --seed 1");
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == r2.out);  // deterministic given the seed
  json fam = json::parse(r1.out);
  REQUIRE(fam.at("witnesses").size() == 64);
  double bound = fam.at("norm1_minus_a").get<double>();
  for (const json& one : fam.at("witnesses"))
    CHECK(one.at("evaluation").get<double>() <= bound + 1e-10);
}

TEST_CASE("scan produces the CSV table and bisects verdict flips") {
  fs::path csv = scratch_dir() / "stateA.csv";
  RunResult r = run(
      "scan --family state_A --grid alpha=0.01:0.7:24 "
      "--criteria theorem2,theorem3 --bisect theorem2 -o " +
      csv.string());
  CHECK(r.exit_code == 0);
  std::string table = read_text_file(csv.string());
  CHECK(table.find("alpha,theorem2_lhs,theorem2_bound,theorem2_verdict,"
                   "theorem3_lhs,theorem3_bound,theorem3_verdict") == 0);
  auto pos = table.find("# bisect,theorem2,");
  REQUIRE(pos != std::string::npos);
  double flip = std::stod(table.substr(pos + 18));
  CHECK(flip == doctest::Approx(0.5).epsilon(1e-8));

  CHECK(run("scan --family state_A --grid alpha=0.01:0.7:5 "
            "--criteria theorem2 --bisect theorem9")
            .exit_code == 3);
}

TEST_CASE("scan supports the ppt pseudo-criterion") {
  RunResult r = run(
      "scan --family isotropic --grid alpha=0.05:0.9:18 --set d=2 "
      "--criteria theorem2,ppt --bisect ppt");
  CHECK(r.exit_code == 0);
  auto pos = r.out.find("# bisect,ppt,");
  REQUIRE(pos != std::string::npos);
  double flip = std::stod(r.out.substr(pos + 13));
  CHECK(flip == doctest::Approx(1.0 / 3).epsilon(1e-8));
}

TEST_CASE("scan certifies the bound-entangled a-grid under the qubit split") {
  RunResult r = run(
      "scan --family bound_entangled --grid a=0:1:11 --set alpha=0.2 "
      "--criteria theorem4 --shape-override 2,2,2");
  CHECK(r.exit_code == 0);
  std::size_t certified = 0, pos = 0;
  while ((pos = r.out.find("separable_certified", pos)) != std::string::npos) {
    ++certified;
    pos += 1;
  }
  CHECK(certified == 11);
}

TEST_CASE("shape override reinterprets the 2x4 family as three qubits") {
  fs::path state = scratch_dir() / "bound.json";
  run("catalog bound_entangled --set a=0.5 --set alpha=0.2 -o " +
      state.string());

  RunResult cube = run("analyze " + state.string() + " --shape-override 2,2,2");
  CHECK(cube.exit_code == 0);
  json report = json::parse(cube.out);
  CHECK(report.at("certified_by") == "theorem4");

  RunResult flat = run("analyze " + state.string());
  json flat_report = json::parse(flat.out);
  bool saw_theorem7 = false;
  for (const json& c : flat_report.at("criteria"))
    saw_theorem7 = saw_theorem7 || c.at("name") == "theorem7";
  CHECK(saw_theorem7);
}
