#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "firebreak/bench.hpp"
#include "firebreak/chain_checks.hpp"
#include "firebreak/dot_export.hpp"
#include "firebreak/exact_solver.hpp"
#include "firebreak/generators.hpp"
#include "firebreak/instance_io.hpp"
#include "firebreak/reductions.hpp"
#include "firebreak/risk.hpp"
#include "firebreak/sat.hpp"
#include "firebreak/tree_solver.hpp"

namespace {

using namespace firebreak;

std::string display(double v) {
  if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 1e15) {
    std::ostringstream ss;
    ss << static_cast<long long>(v);
    return ss.str();
  }
  std::ostringstream ss;
  ss.precision(12);
  ss << v;
  return ss.str();
}

std::string display(const Rational& v) { return fraction_string(v); }

template <class T>
std::string cut_list(const MixedGraph<T>& g, const CutSystem& cut) {
  std::ostringstream ss;
  bool first = true;
  for (int e : cut.members) {
    if (!first) ss << ',';
    first = false;
    ss << g.edge(e).tail << '-' << g.edge(e).head;
  }
  return ss.str();
}

int run_risk(const std::string& engine, const std::string& file, std::uint64_t samples,
             std::uint64_t seed) {
  auto loaded = load_instance_file(file);
  std::visit(
      [&](const auto& inst) {
        const auto& g = inst.graph;
        if (engine == "windy") {
          std::cout << "rho=" << display(windy_risk(g).value) << " engine=windy\n";
        } else if (engine == "exact") {
          std::cout << "rho=" << display(exact_risk(g).value) << " engine=exact\n";
        } else if (engine == "naive") {
          std::cout << "rho=" << display(naive_risk(g).value) << " engine=naive\n";
        } else {
          auto r = mc_risk(g, samples, seed);
          std::cout << "rho=" << display(r.value) << " engine=mc stderr=" << display(*r.std_error)
                    << " samples=" << *r.samples << '\n';
        }
      },
      loaded);
  return 0;
}

int run_solve(const std::string& algo, const std::string& file) {
  auto loaded = load_instance_file(file);
  std::visit(
      [&](const auto& inst) {
        if (algo == "tree") {
          auto sol = solve_tree(inst);
          std::cout << "saved=" << display(sol.saved) << " risk=" << display(sol.risk)
                    << " cost=" << display(sol.cost)
                    << " cuts=" << cut_list(inst.graph, sol.cut) << '\n';
        } else {
          auto sol = solve_exhaustive(inst);
          std::cout << "saved=" << display(sol.saved) << " risk=" << display(sol.risk)
                    << " cost=" << display(sol.cost)
                    << " cuts=" << cut_list(inst.graph, sol.cut) << '\n';
        }
      },
      loaded);
  return 0;
}

std::vector<long long> parse_weight_file(const std::string& path) {
  std::istringstream in(read_text_file(path));
  std::vector<long long> weights;
  long long w;
  while (in >> w) weights.push_back(w);
  if (weights.empty()) throw std::invalid_argument("no integers in " + path);
  return weights;
}

Max2SatInstance load_max2sat(const std::string& path, long long k_flag) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  long long k_comment = -1;
  auto cnf = parse_dimacs(in, &k_comment);
  long long k = k_flag >= 0 ? k_flag : k_comment;
  if (k < 0)
    throw std::invalid_argument("Max2SAT input needs a threshold: pass --k or a 'c k K' line");
  std::vector<std::array<int, 2>> clauses;
  for (const auto& c : cnf.clauses) {
    if (c.size() != 2) throw std::invalid_argument("Max2SAT input must contain only 2-clauses");
    clauses.push_back({c[0], c[1]});
  }
  return Max2SatInstance::make(cnf.num_vars, std::move(clauses), k);
}

int run_reduce(const std::string& kind, const std::string& in_path,
               const std::string& out_path, long long k_flag, long long f_flag) {
  if (kind == "partition") {
    auto built = partition_to_star(parse_weight_file(in_path));
    save_instance_file(out_path, LoadedInstance{built.instance});
    write_text_file(out_path + ".cert.json", certificate_json(built.certificate));
    std::cout << "wrote " << out_path << " (B=R=" << display(built.instance.budget) << ")\n";
    return 0;
  }
  if (kind == "3sat-2sat") {
    std::ifstream in(in_path);
    if (!in) throw std::runtime_error("cannot open: " + in_path);
    auto cnf = parse_dimacs(in);
    auto phi = r3sat_to_max2sat(cnf);
    std::ostringstream out;
    write_dimacs(out, phi);
    write_text_file(out_path, out.str());
    ReductionCertificate cert;
    cert.kind = "r3sat_to_max2sat";
    cert.source = in_path;
    cert.parameters = {{"source_clauses", std::to_string(cnf.clauses.size())},
                       {"output_clauses", std::to_string(phi.clauses.size())},
                       {"output_vars", std::to_string(phi.num_vars)},
                       {"K", std::to_string(phi.k)}};
    write_text_file(out_path + ".cert.json", certificate_json(cert));
    std::cout << "wrote " << out_path << " (K=" << phi.k << ")\n";
    return 0;
  }
  if (kind == "2sat-wfl") {
    auto phi = load_max2sat(in_path, k_flag);
    auto built = max2sat_to_wfl(phi);
    save_instance_file(out_path, LoadedInstance{built.instance});
    write_text_file(out_path + ".cert.json", certificate_json(built.certificate));
    std::cout << "wrote " << out_path << " (B=" << display(built.instance.budget)
              << " R=" << display(*built.instance.risk_threshold) << ")\n";
    return 0;
  }
  if (kind == "flatten-values" || kind == "flatten-costs") {
    auto loaded = load_instance_file(in_path);
    if (!std::holds_alternative<Instance<Rational>>(loaded))
      throw std::invalid_argument(kind + " requires a rational-mode instance");
    const auto& inst = std::get<Instance<Rational>>(loaded);
    if (kind == "flatten-values") {
      auto flat = flatten_values(inst);
      save_instance_file(out_path, LoadedInstance{flat.instance});
      write_text_file(out_path + ".cert.json", certificate_json(flat.certificate));
      std::cout << "wrote " << out_path << " (" << flat.instance.graph.vertex_count()
                << " vertices)\n";
    } else {
      if (f_flag <= 0) throw std::invalid_argument("flatten-costs requires --f");
      auto flat = flatten_costs(inst, f_flag);
      save_instance_file(out_path, LoadedInstance{flat.instance});
      write_text_file(out_path + ".cert.json", certificate_json(flat.certificate));
      std::cout << "wrote " << out_path << " (M=" << flat.m_param << ")\n";
    }
    return 0;
  }
  throw std::invalid_argument("unknown reduction: " + kind);
}

int run_gen(const std::string& kind, int n, std::uint64_t seed, double burn_rate,
            long long budget, double edge_prob, const std::string& weights_csv,
            const std::string& out_path) {
  if (budget < 0) budget = std::max<long long>(1, n / 10);
  if (kind == "tree") {
    save_instance_file(out_path, LoadedInstance{gen_tree(n, seed, burn_rate, budget)});
  } else if (kind == "grid") {
    save_instance_file(out_path, LoadedInstance{gen_grid(n, seed, burn_rate, budget)});
  } else if (kind == "random") {
    save_instance_file(out_path, LoadedInstance{gen_random(n, seed, edge_prob, budget)});
  } else if (kind == "star") {
    PartitionStarResult built = [&] {
      if (weights_csv.empty()) return gen_star(n, seed);
      std::vector<long long> weights;
      std::istringstream ss(weights_csv);
      std::string item;
      while (std::getline(ss, item, ',')) weights.push_back(std::stoll(item));
      return partition_to_star(weights);
    }();
    save_instance_file(out_path, LoadedInstance{built.instance});
    write_text_file(out_path + ".cert.json", certificate_json(built.certificate));
  } else {
    throw std::invalid_argument("unknown generator: " + kind);
  }
  std::cout << "wrote " << out_path << '\n';
  return 0;
}

int run_verify(const std::string& what) {
  if (what == "gadgets") {
    auto report = verify_gadget_claims();
    std::cout << report.details;
    std::cout << (report.all_pass() ? "all gadget claims hold\n" : "gadget claims FAILED\n");
    return report.all_pass() ? 0 : 1;
  }
  if (what == "chains") {
    bool ok = true;
    auto partition = check_partition_chain();
    std::cout << "partition chain: " << partition.cases << " cases, " << partition.failures
              << " failures\n";
    ok = ok && partition.pass();
    auto sat = check_3sat_chain();
    std::cout << "3sat chain: " << sat.cases << " cases, " << sat.failures << " failures\n";
    ok = ok && sat.pass();
    auto wfl = check_wfl_chain();
    std::cout << "wfl chain: " << wfl.cases << " cases, " << wfl.failures << " failures\n";
    ok = ok && wfl.pass();
    if (!ok) std::cout << partition.detail << sat.detail << wfl.detail;
    return ok ? 0 : 1;
  }
  throw std::invalid_argument("unknown verify target: " + what);
}

int run_export(const std::string& file, const std::string& cuts_csv,
               const std::string& out_path) {
  auto loaded = load_instance_file(file);
  CutSystem cut;
  if (!cuts_csv.empty()) {
    std::istringstream ss(cuts_csv);
    std::string item;
    std::vector<int> ids;
    while (std::getline(ss, item, ',')) ids.push_back(std::stoi(item));
    cut = std::visit(
        [&](const auto& inst) { return close_cut(inst.graph, std::span<const int>(ids)); },
        loaded);
  }
  auto dot = export_dot(loaded, cut.empty() ? nullptr : &cut);
  if (out_path.empty())
    std::cout << dot;
  else
    write_text_file(out_path, dot);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Firebreak location toolkit: risk evaluation, budgeted cut solvers, "
               "hardness-reduction instance builders"};
  app.require_subcommand(1);

  std::string engine = "windy", algo = "tree", file, in_path, out_path, kind, what;
  std::string weights_csv, cuts_csv, suite_path, csv_path, dot_out;
  std::uint64_t samples = 10000, seed = 1;
  long long k_flag = -1, f_flag = -1, budget = -1;
  int n = 10;
  double burn_rate = 0.2, edge_prob = 0.3;

  auto* risk = app.add_subcommand("risk", "evaluate the risk of an instance");
  risk->add_option("--engine", engine, "windy|exact|naive|mc")
      ->check(CLI::IsMember({"windy", "exact", "naive", "mc"}));
  risk->add_option("--samples", samples, "Monte Carlo sample count");
  risk->add_option("--seed", seed, "Monte Carlo seed");
  risk->add_option("file", file, "instance file")->required();

  auto* solve = app.add_subcommand("solve", "find an optimal cut system");
  solve->add_option("--algo", algo, "tree|exhaustive")
      ->check(CLI::IsMember({"tree", "exhaustive"}));
  solve->add_option("file", file, "instance file")->required();

  auto* reduce = app.add_subcommand("reduce", "run an instance construction");
  reduce->add_option("kind", kind, "partition|3sat-2sat|2sat-wfl|flatten-values|flatten-costs")
      ->required()
      ->check(CLI::IsMember({"partition", "3sat-2sat", "2sat-wfl", "flatten-values",
                             "flatten-costs"}));
  reduce->add_option("--k", k_flag, "Max2SAT threshold K");
  reduce->add_option("--f", f_flag, "cost bound f for flatten-costs");
  reduce->add_option("in", in_path, "input file")->required();
  reduce->add_option("out", out_path, "output instance file")->required();

  auto* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("kind", kind, "tree|star|grid|random")
      ->required()
      ->check(CLI::IsMember({"tree", "star", "grid", "random"}));
  gen->add_option("--n", n, "size parameter")->required();
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--burn-rate", burn_rate, "binary ignition rate");
  gen->add_option("--budget", budget, "instance budget (default n/10)");
  gen->add_option("--edge-prob", edge_prob, "edge probability for random graphs");
  gen->add_option("--weights", weights_csv, "comma-separated star weights");
  gen->add_option("out", out_path, "output instance file")->required();

  auto* verify = app.add_subcommand("verify", "run the gadget or chain suites");
  verify->add_option("what", what, "gadgets|chains")
      ->required()
      ->check(CLI::IsMember({"gadgets", "chains"}));

  auto* bench = app.add_subcommand("bench", "time solver runs");
  bench->add_option("--suite", suite_path, "bench suite JSON")->required();
  bench->add_option("--out", csv_path, "output CSV path")->required();

  auto* exp = app.add_subcommand("export", "render an instance as DOT");
  exp->add_option("--dot", file, "instance file to render")->required();
  exp->add_option("--cuts", cuts_csv, "comma-separated cut edge ids");
  exp->add_option("--out", dot_out, "write DOT here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (risk->parsed()) return run_risk(engine, file, samples, seed);
    if (solve->parsed()) return run_solve(algo, file);
    if (reduce->parsed()) return run_reduce(kind, in_path, out_path, k_flag, f_flag);
    if (gen->parsed())
      return run_gen(kind, n, seed, burn_rate, budget, edge_prob, weights_csv, out_path);
    if (verify->parsed()) return run_verify(what);
    if (bench->parsed()) {
      auto records = run_bench_suite(read_text_file(suite_path));
      write_text_file(csv_path, bench_csv(records));
      std::cout << "wrote " << csv_path << " (" << records.size() << " cases)\n";
      return 0;
    }
    if (exp->parsed()) return run_export(file, cuts_csv, dot_out);
  } catch (const std::exception& e) {
    std::cerr << "{\"error\": \"" << e.what() << "\"}\n";
    return 1;
  }
  return 0;
}
