#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "selection/report.hpp"

namespace sel {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = true;
  i64 cases = 0;
  i64 failures = 0;
  std::string detail;
  Json data = Json::object();  // summary values and replayable failing instances
};

// Per-instance seed derived from the run seed, criterion and trial index.
std::uint64_t trial_seed(std::uint64_t seed, int criterion, i64 trial);

CriterionResult check_oracle_equivalence(std::uint64_t seed);
CriterionResult check_first_lower_bounds(std::uint64_t seed);
CriterionResult check_upper_witnesses(std::uint64_t seed);
CriterionResult check_interval_second(std::uint64_t seed);
CriterionResult check_rectangle_second(std::uint64_t seed);
CriterionResult check_centerpoint_soundness(std::uint64_t seed);
CriterionResult check_delaunay_planarity(std::uint64_t seed);

// Exact maximum strong quadrant depth of the decreasing chain of size n.
i64 decreasing_chain_quadrant_max(int n);

// Smallest m with m >= 3 n^(4/3), clamped to C(n, 2).
i64 rectangle_second_m_floor(int n);

struct SelftestReport {
  std::uint64_t seed = 0;
  std::vector<CriterionResult> criteria;
  bool passed() const;
  Json to_json() const;  // no timings, so equal seeds give equal bytes
};

// Criteria 1 to 7 in order; `only` restricts to the listed ids when nonempty.
SelftestReport run_selftest(std::uint64_t seed, const std::vector<int>& only = {});

}  // namespace sel
