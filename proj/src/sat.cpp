#include "firebreak/sat.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace firebreak {

namespace {

void validate_clause(const Clause& c, int num_vars, std::size_t min_size, std::size_t max_size) {
  if (c.size() < min_size || c.size() > max_size)
    throw std::invalid_argument("clause size out of range");
  for (int lit : c)
    if (lit == 0 || std::abs(lit) > num_vars)
      throw std::invalid_argument("literal out of range");
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (c[i] == c[j]) throw std::invalid_argument("duplicate literal in clause");
      if (c[i] == -c[j]) throw std::invalid_argument("clause contains opposite literals");
    }
}

bool literal_true(int lit, std::uint32_t assignment) {
  bool value = assignment >> (std::abs(lit) - 1) & 1;
  return lit > 0 ? value : !value;
}

}  // namespace

CnfInstance CnfInstance::make(int num_vars, std::vector<Clause> clauses) {
  if (num_vars < 0 || num_vars > 1'000'000) throw std::invalid_argument("bad variable count");
  for (const auto& c : clauses) validate_clause(c, num_vars, 1, 3);
  return CnfInstance{num_vars, std::move(clauses)};
}

Max2SatInstance Max2SatInstance::make(int num_vars, std::vector<std::array<int, 2>> clauses,
                                      long long k) {
  for (const auto& c : clauses) validate_clause({c[0], c[1]}, num_vars, 2, 2);
  if (k < 0 || k > static_cast<long long>(clauses.size()))
    throw std::invalid_argument("threshold K must satisfy 0 <= K <= |C|");
  return Max2SatInstance{num_vars, std::move(clauses), k};
}

bool cnf_satisfiable(const CnfInstance& cnf) {
  if (cnf.num_vars > 24) throw std::invalid_argument("cnf_satisfiable bound exceeded");
  for (std::uint32_t a = 0; a < (1u << cnf.num_vars); ++a) {
    bool ok = true;
    for (const auto& c : cnf.clauses) {
      bool sat = false;
      for (int lit : c) sat = sat || literal_true(lit, a);
      if (!sat) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return cnf.clauses.empty() ? true : false;
}

long long satisfied_count(const std::vector<std::array<int, 2>>& clauses,
                          std::uint32_t assignment) {
  long long n = 0;
  for (const auto& c : clauses)
    if (literal_true(c[0], assignment) || literal_true(c[1], assignment)) ++n;
  return n;
}

namespace {

struct ClauseMasks {
  std::uint32_t pos = 0;  // variables whose positive literal appears
  std::uint32_t neg = 0;
};

std::vector<ClauseMasks> clause_masks(const Max2SatInstance& phi) {
  std::vector<ClauseMasks> masks(phi.clauses.size());
  for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
    for (int lit : phi.clauses[i]) {
      std::uint32_t bit = 1u << (std::abs(lit) - 1);
      if (lit > 0)
        masks[i].pos |= bit;
      else
        masks[i].neg |= bit;
    }
  }
  return masks;
}

}  // namespace

long long max2sat_brute(const Max2SatInstance& phi) {
  if (phi.num_vars > 24) throw std::invalid_argument("max2sat_brute bound exceeded");
  auto masks = clause_masks(phi);
  long long best = 0;
  for (std::uint64_t a = 0; a < (1ull << phi.num_vars); ++a) {
    std::uint32_t bits = static_cast<std::uint32_t>(a);
    long long n = 0;
    for (const auto& m : masks)
      if ((m.pos & bits) || (m.neg & ~bits)) ++n;
    best = std::max(best, n);
    if (best == static_cast<long long>(masks.size())) break;
  }
  return best;
}

bool max2sat_reaches(const Max2SatInstance& phi, long long threshold) {
  if (threshold <= 0) return true;
  if (threshold > static_cast<long long>(phi.clauses.size())) return false;
  if (phi.num_vars > 24) throw std::invalid_argument("max2sat_reaches bound exceeded");
  auto masks = clause_masks(phi);
  for (std::uint64_t a = 0; a < (1ull << phi.num_vars); ++a) {
    std::uint32_t bits = static_cast<std::uint32_t>(a);
    long long n = 0;
    for (const auto& m : masks)
      if ((m.pos & bits) || (m.neg & ~bits)) ++n;
    if (n >= threshold) return true;
  }
  return false;
}

std::vector<Clause> three_clause_gadget(int l1, int l2, int l3, int a) {
  return {{l1, l2}, {l1, l3}, {l2, l3}, {l1, a}, {l2, a}, {l3, a},
          {-l1},    {-l2},    {-l3},    {-a}};
}

std::vector<std::array<int, 2>> two_clause_gadget(int x, int y, int z) {
  return {{x, y}, {x, -y}, {x, z}, {x, -z}, {-x, y}, {-x, -y}, {-x, z}, {-x, -z}};
}

std::vector<std::array<int, 2>> unit_clause_expansion(int literal, int r) {
  return {{literal, r}, {literal, -r}};
}

Max2SatInstance r3sat_to_max2sat(const CnfInstance& cnf) {
  long long three_clauses = 0;
  for (const auto& c : cnf.clauses) {
    if (c.size() == 1) throw std::invalid_argument("input clauses must have size 2 or 3");
    if (c.size() == 3) ++three_clauses;
  }

  int next_var = cnf.num_vars;
  std::vector<std::array<int, 2>> out;
  std::vector<int> pending_units;

  for (const auto& c : cnf.clauses) {
    if (c.size() == 3) {
      int a = ++next_var;
      for (const auto& gc : three_clause_gadget(c[0], c[1], c[2], a)) {
        if (gc.size() == 2)
          out.push_back({gc[0], gc[1]});
        else
          pending_units.push_back(gc[0]);
      }
    } else {
      out.push_back({c[0], c[1]});
      int x = ++next_var, y = ++next_var, z = ++next_var;
      for (const auto& gc : two_clause_gadget(x, y, z)) out.push_back(gc);
    }
  }
  for (int lit : pending_units) {
    int r = ++next_var;
    for (const auto& gc : unit_clause_expansion(lit, r)) out.push_back(gc);
  }

  long long k = 7 * static_cast<long long>(cnf.clauses.size()) + 4 * three_clauses;
  return Max2SatInstance::make(next_var, std::move(out), k);
}

GadgetReport verify_gadget_claims() {
  GadgetReport report;
  std::ostringstream details;

  // Work over four variables: 1..3 stand for the literals of a 3-clause
  // (their polarity is irrelevant to the claims), 4 is the gadget
  // variable.
  auto gadget = three_clause_gadget(1, 2, 3, 4);
  auto count_all = [&](std::uint32_t a) {
    long long n = 0;
    for (const auto& c : gadget) {
      bool sat = false;
      for (int lit : c) sat = sat || literal_true(lit, a);
      if (sat) ++n;
    }
    return n;
  };

  bool at_most_seven = true;
  for (std::uint32_t a = 0; a < 16; ++a)
    if (count_all(a) > 7) at_most_seven = false;
  report.at_most_seven = at_most_seven;
  details << "3-clause gadget <=7: " << (at_most_seven ? "ok" : "violated") << "\n";

  bool six_or_seven = true;
  for (std::uint32_t lits = 0; lits < 8; ++lits) {
    bool c_satisfied = lits != 0;  // positive literals 1..3
    long long best = 0;
    for (std::uint32_t a4 : {0u, 8u}) best = std::max(best, count_all(lits | a4));
    if (c_satisfied && best < 7) six_or_seven = false;
    if (!c_satisfied && best > 6) six_or_seven = false;
  }
  report.six_or_seven = six_or_seven;
  details << "3-clause gadget 6/7 split: " << (six_or_seven ? "ok" : "violated") << "\n";

  auto h = two_clause_gadget(1, 2, 3);
  bool exactly_six = true;
  for (std::uint32_t a = 0; a < 8; ++a)
    if (satisfied_count(h, a) != 6) exactly_six = false;
  report.exactly_six = exactly_six;
  details << "2-clause gadget ==6: " << (exactly_six ? "ok" : "violated") << "\n";

  auto unit = unit_clause_expansion(1, 2);
  bool unit_ok = true;
  for (std::uint32_t a = 0; a < 4; ++a) {
    long long n = satisfied_count(unit, a);
    bool lit_true = a & 1;
    if (lit_true && n != 2) unit_ok = false;
    if (!lit_true && n != 1) unit_ok = false;
  }
  report.unit_expansion = unit_ok;
  details << "1-clause expansion 2/1 split: " << (unit_ok ? "ok" : "violated") << "\n";

  report.details = details.str();
  return report;
}

CnfInstance parse_dimacs(std::istream& in, long long* k_comment) {
  std::string line;
  int num_vars = -1;
  long long num_clauses = -1;
  std::vector<Clause> clauses;
  Clause current;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == 'c') {
      std::istringstream cs(line.substr(1));
      std::string tag;
      long long value;
      if (k_comment && cs >> tag >> value && tag == "k") *k_comment = value;
      continue;
    }
    if (line[0] == 'p') {
      std::istringstream ps(line);
      std::string p, fmt;
      if (!(ps >> p >> fmt >> num_vars >> num_clauses) || fmt != "cnf")
        throw std::invalid_argument("malformed DIMACS problem line");
      continue;
    }
    std::istringstream ls(line);
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        if (!current.empty()) clauses.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(lit);
      }
    }
  }
  if (!current.empty()) clauses.push_back(std::move(current));
  if (num_vars < 0) throw std::invalid_argument("missing DIMACS problem line");
  if (num_clauses >= 0 && num_clauses != static_cast<long long>(clauses.size()))
    throw std::invalid_argument("DIMACS clause count mismatch");
  return CnfInstance::make(num_vars, std::move(clauses));
}

void write_dimacs(std::ostream& out, const CnfInstance& cnf) {
  out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
  for (const auto& c : cnf.clauses) {
    for (int lit : c) out << lit << ' ';
    out << "0\n";
  }
}

void write_dimacs(std::ostream& out, const Max2SatInstance& phi) {
  out << "c k " << phi.k << '\n';
  out << "p cnf " << phi.num_vars << ' ' << phi.clauses.size() << '\n';
  for (const auto& c : phi.clauses) out << c[0] << ' ' << c[1] << " 0\n";
}

}  // namespace firebreak
