// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <string>

#include "selection/selftest.hpp"

using namespace sel;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Gate {
  int id;
  CriterionResult (*check)(std::uint64_t);
  double budget_s;  // wall-clock limit, 0 for none
};

bool report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s %d %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main() {
  const Gate gates[] = {
      {1, check_oracle_equivalence, 60},   {2, check_first_lower_bounds, 0},
      {3, check_upper_witnesses, 300},     {4, check_interval_second, 0},
      {5, check_rectangle_second, 120},    {6, check_centerpoint_soundness, 0},
      {7, check_delaunay_planarity, 0},
  };
  bool all = true;
  for (const auto& g : gates) {
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    std::string detail;
    try {
      r = g.check(kSeed);
      detail = r.detail;
    } catch (const std::exception& e) {
      r.id = g.id;
      r.name = "criterion";
      r.passed = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = r.passed;
    char timing[64];
    std::snprintf(timing, sizeof timing, " [%.2fs]", secs);
    detail += timing;
    if (g.budget_s > 0 && secs > g.budget_s) {
      ok = false;
      detail += " over time budget";
    }
    all = report(g.id, r.name, ok, detail) && all;
  }

  std::string first, second;
  try {
    first = run_selftest(kSeed).to_json().dump(2);
    second = run_selftest(kSeed).to_json().dump(2);
  } catch (const std::exception& e) {
    first = e.what();
    second.clear();
  }
  all = report(8, "determinism", !first.empty() && first == second,
               first == second ? "two seed-42 runs give identical reports (" + std::to_string(first.size()) + " bytes)"
                               : "reports differ") &&
        all;
  return all ? 0 : 1;
}
