#include "firebreak/bench.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "firebreak/exact_solver.hpp"
#include "firebreak/generators.hpp"
#include "firebreak/instance_io.hpp"
#include "firebreak/tree_solver.hpp"

namespace firebreak {

namespace {

template <class F>
double time_ms(int reps, F&& body) {
  auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) body();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

template <class T>
BenchRecord run_case(const std::string& id, const Instance<T>& inst,
                     const std::string& algo, int reps) {
  BenchRecord rec;
  rec.id = id;
  rec.vertices = inst.graph.vertex_count();
  rec.edges = inst.graph.edge_count();
  rec.budget = static_cast<long long>(to_double(inst.budget));
  rec.algo = algo;
  double value = 0.0;
  if (algo == "tree") {
    rec.millis = time_ms(reps, [&] { value = to_double(solve_tree(inst).saved); });
  } else if (algo == "exhaustive") {
    rec.millis = time_ms(reps, [&] { value = to_double(solve_exhaustive(inst).saved); });
  } else {
    throw std::invalid_argument("unknown bench algo: " + algo);
  }
  rec.value = value;
  return rec;
}

}  // namespace

std::string bench_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "id,V,E,B,algo,ms,value\n";
  for (const auto& r : records) {
    out << r.id << ',' << r.vertices << ',' << r.edges << ',' << r.budget << ','
        << r.algo << ',' << r.millis << ',' << r.value << '\n';
  }
  return out.str();
}

BenchRecord bench_tree_case(const std::string& id, int n, long long budget,
                            std::uint64_t seed, double burn_rate, int reps) {
  auto inst = gen_tree(n, seed, burn_rate, budget);
  return run_case(id, inst, "tree", reps);
}

std::vector<BenchRecord> run_bench_suite(const std::string& suite_json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(suite_json);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid bench suite JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("cases") || !doc["cases"].is_array())
    throw std::invalid_argument("bench suite must contain a 'cases' array");

  std::vector<BenchRecord> records;
  int counter = 0;
  for (const auto& jc : doc["cases"]) {
    std::string id = jc.value("id", "case" + std::to_string(counter));
    ++counter;
    std::string kind = jc.value("kind", "tree");
    std::string algo = jc.value("algo", "tree");
    int reps = std::max(1, jc.value("reps", 1));
    if (kind == "tree") {
      int n = jc.at("n").get<int>();
      long long budget = jc.at("budget").get<long long>();
      std::uint64_t seed = jc.value("seed", 1);
      double burn_rate = jc.value("burn_rate", 0.2);
      records.push_back(bench_tree_case(id, n, budget, seed, burn_rate, reps));
    } else if (kind == "file") {
      auto loaded = load_instance_file(jc.at("file").get<std::string>());
      records.push_back(std::visit(
          [&](const auto& inst) { return run_case(id, inst, algo, reps); }, loaded));
    } else {
      throw std::invalid_argument("unknown bench case kind: " + kind);
    }
  }
  return records;
}

}  // namespace firebreak
