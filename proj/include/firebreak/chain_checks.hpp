#pragma once

#include <string>

namespace firebreak {

struct ChainCheckResult {
  long long cases = 0;
  long long failures = 0;
  std::string detail;

  bool pass() const { return cases > 0 && failures == 0; }
};

// Partition <-> star: decide() agrees with a subset-sum brute force on
// every even-sum multiset of at most max_items integers in 1..max_value.
ChainCheckResult check_partition_chain(int max_items = 5, long long max_value = 6);

// 2/3-CNF -> Max2SAT: full satisfiability of the source iff the image
// reaches its threshold, on every clause set of at most max_clauses
// drawn from all 2- and 3-clauses over num_vars variables.
ChainCheckResult check_3sat_chain(int num_vars = 4, int max_clauses = 3);

// Max2SAT -> windy firebreak instance: brute optimum >= K iff decide()
// accepts the constructed instance, over every clause set of at most
// max_clauses on up to max_vars variables and every K in 1..m.
ChainCheckResult check_wfl_chain(int max_vars = 3, int max_clauses = 3);

}  // namespace firebreak
