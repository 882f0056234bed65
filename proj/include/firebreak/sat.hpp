#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace firebreak {

// Literals are DIMACS-style signed integers: +v is the positive literal
// of variable v (1-based), -v its negation.
using Clause = std::vector<int>;

struct CnfInstance {
  int num_vars = 0;
  std::vector<Clause> clauses;

  // Validates: literals in range, no duplicate literal in a clause, no
  // clause containing a variable and its negation, sizes 1..3.
  static CnfInstance make(int num_vars, std::vector<Clause> clauses);
};

struct Max2SatInstance {
  int num_vars = 0;
  std::vector<std::array<int, 2>> clauses;
  long long k = 0;  // satisfaction threshold

  static Max2SatInstance make(int num_vars, std::vector<std::array<int, 2>> clauses,
                              long long k);
};

// Exhaustive satisfiability check, num_vars <= 24.
bool cnf_satisfiable(const CnfInstance& cnf);

// Maximum simultaneously satisfiable clause count, num_vars <= 24.
long long max2sat_brute(const Max2SatInstance& phi);

// Early-exit variant of the question max2sat_brute(phi) >= threshold.
bool max2sat_reaches(const Max2SatInstance& phi, long long threshold);

// Satisfied-clause count for one assignment (bit v-1 of `assignment`
// holds variable v).
long long satisfied_count(const std::vector<std::array<int, 2>>& clauses,
                          std::uint32_t assignment);

// 2/3-CNF to Max2SAT: every 3-clause becomes a ten-clause gadget on a
// fresh variable (six 2-clauses plus four 1-clauses), every original
// 2-clause is kept and joined by an eight-clause always-six gadget on
// three fresh variables, and every intermediate 1-clause expands into
// two 2-clauses on a fresh variable. The threshold is 7|C| + 4|C3|.
Max2SatInstance r3sat_to_max2sat(const CnfInstance& cnf);

// Gadget clause sets, parameterised on variable numbers so tests can
// enumerate or mutate them.
std::vector<Clause> three_clause_gadget(int l1, int l2, int l3, int a);
std::vector<std::array<int, 2>> two_clause_gadget(int x, int y, int z);
std::vector<std::array<int, 2>> unit_clause_expansion(int literal, int r);

struct GadgetReport {
  bool at_most_seven = false;   // 3-clause gadget never exceeds 7
  bool six_or_seven = false;    // 6 cap when c unsatisfied, 7 reachable when satisfied
  bool exactly_six = false;     // 2-clause gadget always satisfies exactly 6
  bool unit_expansion = false;  // 1-clause expansion: 2 when true, 1 when false
  std::string details;

  bool all_pass() const { return at_most_seven && six_or_seven && exactly_six && unit_expansion; }
};

// Exhaustive check of the gadget claims over all truth assignments.
GadgetReport verify_gadget_claims();

// DIMACS cnf. Clause sizes are validated by CnfInstance::make. A "c k
// <K>" comment line carries the Max2SAT threshold when present.
CnfInstance parse_dimacs(std::istream& in, long long* k_comment = nullptr);
void write_dimacs(std::ostream& out, const CnfInstance& cnf);
void write_dimacs(std::ostream& out, const Max2SatInstance& phi);

}  // namespace firebreak
