// End-to-end checks of the installed binary: exit codes, output shape,
// determinism. Each command runs through the shell with stdout/stderr
// captured in temp files.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "firebreak/instance_io.hpp"

namespace {

struct RunResult {
  int status = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path work_dir() {
  auto dir = std::filesystem::temp_directory_path() / "firebreak_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

RunResult run_cli(const std::string& args) {
  auto dir = work_dir();
  auto out_path = (dir / "stdout.txt").string();
  auto err_path = (dir / "stderr.txt").string();
  std::string cmd =
      std::string(CLI_BINARY) + " " + args + " > " + out_path + " 2> " + err_path;
  int rc = std::system(cmd.c_str());
  RunResult result;
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  return result;
}

std::string write_instance(const char* name, const char* text) {
  auto path = (work_dir() / name).string();
  firebreak::write_text_file(path, text);
  return path;
}

}  // namespace

TEST_CASE("risk on a cold instance is zero") {
  auto path = write_instance("cold.json", R"({
    "mode": "float",
    "vertices": [{"id": 0, "value": 2, "ignition": 0}, {"id": 1, "value": 3, "ignition": 0}],
    "edges": [{"tail": 0, "head": 1, "directed": false, "spread": 1, "cost": 1}],
    "budget": 1
  })");
  auto r = run_cli("risk --engine windy " + path);
  CHECK(r.status == 0);
  CHECK(r.out == "rho=0 engine=windy\n");
}

TEST_CASE("monte carlo runs are reproducible per seed") {
  auto dir = work_dir();
  auto gen = run_cli("gen random --n 10 --seed 4 --edge-prob 0.4 " + (dir / "r.json").string());
  REQUIRE(gen.status == 0);
  auto a = run_cli("risk --engine mc --seed 7 --samples 1000 " + (dir / "r.json").string());
  auto b = run_cli("risk --engine mc --seed 7 --samples 1000 " + (dir / "r.json").string());
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("engine=mc") != std::string::npos);
}

TEST_CASE("reduce writes instance plus certificate sidecar") {
  auto dir = work_dir();
  auto weights = (dir / "weights.txt").string();
  firebreak::write_text_file(weights, "1 1 2\n");
  auto out = (dir / "star.json").string();
  auto r = run_cli("reduce partition " + weights + " " + out);
  CHECK(r.status == 0);
  CHECK(std::filesystem::exists(out));
  CHECK(std::filesystem::exists(out + ".cert.json"));
  auto loaded = firebreak::load_instance_file(out);
  CHECK(std::get<firebreak::Instance<firebreak::Rational>>(loaded).budget ==
        firebreak::Rational(2));
  CHECK(slurp(out + ".cert.json").find("partition_to_star") != std::string::npos);

  auto solve = run_cli("solve --algo exhaustive " + out);
  CHECK(solve.status == 0);
  CHECK(solve.out.find("risk=2") != std::string::npos);
}

TEST_CASE("reduction pipeline: cnf to max2sat to instance") {
  auto dir = work_dir();
  auto cnf = (dir / "phi.cnf").string();
  firebreak::write_text_file(cnf, "p cnf 2 1\n1 -2 0\n");
  auto m2s = (dir / "phi2.cnf").string();
  auto r1 = run_cli("reduce 3sat-2sat " + cnf + " " + m2s);
  CHECK(r1.status == 0);
  CHECK(slurp(m2s).find("c k 7") != std::string::npos);

  auto wfl = (dir / "wfl.json").string();
  auto r2 = run_cli("reduce 2sat-wfl --k 1 " + cnf + " " + wfl);
  CHECK(r2.status == 0);
  auto loaded = firebreak::load_instance_file(wfl);
  CHECK(std::get<firebreak::Instance<firebreak::Rational>>(loaded).graph.vertex_count() == 11);
}

TEST_CASE("export renders dot to stdout") {
  auto dir = work_dir();
  run_cli("gen grid --n 3 --seed 2 " + (dir / "g.json").string());
  auto r = run_cli("export --dot " + (dir / "g.json").string() + " --cuts 0,1");
  CHECK(r.status == 0);
  CHECK(r.out.find("digraph") != std::string::npos);
  CHECK(r.out.find("style=dashed") != std::string::npos);
}

TEST_CASE("bench writes the fixed csv columns") {
  auto dir = work_dir();
  auto suite = (dir / "suite.json").string();
  firebreak::write_text_file(
      suite, R"({"cases": [{"id": "a", "kind": "tree", "n": 20, "budget": 2, "seed": 1}]})");
  auto csv = (dir / "out.csv").string();
  auto r = run_cli("bench --suite " + suite + " --out " + csv);
  CHECK(r.status == 0);
  CHECK(slurp(csv).rfind("id,V,E,B,algo,ms,value\n", 0) == 0);
}

TEST_CASE("failures exit nonzero with a structured message") {
  auto missing = run_cli("risk --engine windy /definitely/not/here.json");
  CHECK(missing.status == 1);
  CHECK(missing.err.find("{\"error\":") != std::string::npos);

  auto path = write_instance("cycle.json", R"({
    "mode": "float",
    "vertices": [{"id": 0, "value": 1, "ignition": 0}, {"id": 1, "value": 1, "ignition": 0},
                 {"id": 2, "value": 1, "ignition": 0}],
    "edges": [{"tail": 0, "head": 1, "directed": false, "spread": 1, "cost": 1},
              {"tail": 1, "head": 2, "directed": false, "spread": 1, "cost": 1},
              {"tail": 2, "head": 0, "directed": false, "spread": 1, "cost": 1}],
    "budget": 1
  })");
  auto non_tree = run_cli("solve --algo tree " + path);
  CHECK(non_tree.status == 1);
  CHECK(non_tree.err.find("tree") != std::string::npos);

  auto bad_flag = run_cli("risk --engine warp " + path);
  CHECK(bad_flag.status != 0);
}

TEST_CASE("gadget verification succeeds") {
  auto r = run_cli("verify gadgets");
  CHECK(r.status == 0);
  CHECK(r.out.find("all gadget claims hold") != std::string::npos);
}
