#include "firebreak/chain_checks.hpp"

#include <array>
#include <sstream>
#include <vector>

#include "firebreak/exact_solver.hpp"
#include "firebreak/reductions.hpp"
#include "firebreak/sat.hpp"

namespace firebreak {

namespace {

bool subset_sum_half(const std::vector<long long>& weights, long long half) {
  // weights are tiny, a bitmask sweep is plenty
  for (std::uint32_t mask = 0; mask < (1u << weights.size()); ++mask) {
    long long sum = 0;
    for (std::size_t i = 0; i < weights.size(); ++i)
      if (mask & (1u << i)) sum += weights[i];
    if (sum == half) return true;
  }
  return false;
}

void note_failure(ChainCheckResult& result, const std::string& what) {
  ++result.failures;
  if (result.failures <= 5) result.detail += what + "\n";
}

}  // namespace

ChainCheckResult check_partition_chain(int max_items, long long max_value) {
  ChainCheckResult result;
  std::vector<long long> weights;
  auto visit = [&](auto&& self, long long min_value) -> void {
    if (!weights.empty()) {
      long long total = 0;
      for (long long w : weights) total += w;
      if (total % 2 == 0) {
        ++result.cases;
        auto built = partition_to_star(weights);
        bool via_decide = decide(built.instance);
        bool via_brute = subset_sum_half(weights, total / 2);
        if (via_decide != via_brute) {
          std::ostringstream what;
          what << "partition mismatch for {";
          for (long long w : weights) what << w << ' ';
          what << "}: decide=" << via_decide << " brute=" << via_brute;
          note_failure(result, what.str());
        }
      }
    }
    if (static_cast<int>(weights.size()) == max_items) return;
    for (long long w = min_value; w <= max_value; ++w) {
      weights.push_back(w);
      self(self, w);
      weights.pop_back();
    }
  };
  visit(visit, 1);
  return result;
}

ChainCheckResult check_3sat_chain(int num_vars, int max_clauses) {
  ChainCheckResult result;
  std::vector<Clause> candidates;
  for (int a = 1; a <= num_vars; ++a)
    for (int b = a + 1; b <= num_vars; ++b)
      for (int sa : {1, -1})
        for (int sb : {1, -1}) candidates.push_back({sa * a, sb * b});
  for (int a = 1; a <= num_vars; ++a)
    for (int b = a + 1; b <= num_vars; ++b)
      for (int c = b + 1; c <= num_vars; ++c)
        for (int sa : {1, -1})
          for (int sb : {1, -1})
            for (int sc : {1, -1}) candidates.push_back({sa * a, sb * b, sc * c});

  std::vector<Clause> chosen;
  auto run_one = [&]() {
    ++result.cases;
    auto cnf = CnfInstance::make(num_vars, chosen);
    bool satisfiable = cnf_satisfiable(cnf);
    auto phi = r3sat_to_max2sat(cnf);
    bool reaches = max2sat_reaches(phi, phi.k);
    if (satisfiable != reaches) {
      std::ostringstream what;
      what << "3sat chain mismatch on " << chosen.size() << " clauses (sat=" << satisfiable
           << " reaches=" << reaches << ")";
      note_failure(result, what.str());
    }
  };
  auto visit = [&](auto&& self, std::size_t min_index) -> void {
    if (!chosen.empty()) run_one();
    if (static_cast<int>(chosen.size()) == max_clauses) return;
    for (std::size_t i = min_index; i < candidates.size(); ++i) {
      chosen.push_back(candidates[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  visit(visit, 0);
  return result;
}

ChainCheckResult check_wfl_chain(int max_vars, int max_clauses) {
  ChainCheckResult result;
  for (int n = 2; n <= max_vars; ++n) {
    std::vector<std::array<int, 2>> candidates;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        for (int sa : {1, -1})
          for (int sb : {1, -1}) candidates.push_back({sa * a, sb * b});

    std::vector<std::array<int, 2>> chosen;
    auto run_one = [&]() {
      for (long long k = 1; k <= static_cast<long long>(chosen.size()); ++k) {
        ++result.cases;
        auto phi = Max2SatInstance::make(n, chosen, k);
        bool brute = max2sat_brute(phi) >= k;
        auto built = max2sat_to_wfl(phi);
        bool via_instance = decide(built.instance);
        if (brute != via_instance) {
          std::ostringstream what;
          what << "wfl chain mismatch: n=" << n << " m=" << chosen.size() << " K=" << k
               << " brute=" << brute << " decide=" << via_instance;
          note_failure(result, what.str());
        }
      }
    };
    auto visit = [&](auto&& self, std::size_t min_index) -> void {
      if (!chosen.empty()) run_one();
      if (static_cast<int>(chosen.size()) == max_clauses) return;
      for (std::size_t i = min_index; i < candidates.size(); ++i) {
        chosen.push_back(candidates[i]);
        self(self, i + 1);
        chosen.pop_back();
      }
    };
    visit(visit, 0);
  }
  return result;
}

}  // namespace firebreak
