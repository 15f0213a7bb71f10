#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tendonplan/ga.hpp"

namespace tendon {

enum class Algo { astar, ga };

struct AlgoVariant {
  Algo algo = Algo::astar;
  PlanMode mode = PlanMode::improved;
  bool operator==(const AlgoVariant&) const = default;
};

inline constexpr std::array<AlgoVariant, 4> kAllVariants = {{
    {Algo::astar, PlanMode::improved},
    {Algo::astar, PlanMode::classical},
    {Algo::ga, PlanMode::improved},
    {Algo::ga, PlanMode::classical},
}};

std::string algo_name(Algo algo);
std::string mode_name(PlanMode mode);
std::string variant_name(const AlgoVariant& v);
AlgoVariant parse_variant(const std::string& name);

struct PlanRequest {
  int lower_start = 50;
  int lower_goal = 3;
  int upper_start = 47;
  int upper_goal = 14;
  CriteriaWeights weights;
  AlgoVariant algo;
  bool use_alternatives = false;
  int alternative_count = 3;
  std::uint64_t rng_seed = 0;
  GaConfig ga;
};

struct SectionResult {
  SectionPlan plan;
  int intended_goal = 0;
  int chosen_goal = 0;
};

struct PlanResult {
  SectionResult lower;
  SectionResult upper;
  FitnessBreakdown fitness;  // both sections combined, accuracy vs intent
  double elapsed_us = 0.0;
};

/// Plans both sections of one request. With alternatives enabled the
/// intended goal and its nearest alternatives are each planned and the
/// candidate with the lowest total (accuracy measured against the intended
/// goal) wins; the intended goal wins ties. Sub-run seeds derive from
/// (rng_seed, section, candidate index), so the intended-goal sub-run is
/// byte-identical with and without alternatives.
PlanResult plan(const GlobalEnv& env, const PlanRequest& req,
                const WearState& wear);

struct BenchCell {
  int group = 0;
  AlgoVariant variant;
  int runs = 0;
  double mean_time_us = 0.0;
  double best_pct = 0.0;   // runs matching the best total across variants
  double equal_pct = 0.0;  // runs matching the improved A* total
  bool operator==(const BenchCell&) const = default;
};

struct GroupComparison {
  int group = 0;  // improved A* vs improved GA, per run
  double astar_better_pct = 0.0;
  double equal_pct = 0.0;
  double astar_worse_pct = 0.0;
  bool operator==(const GroupComparison&) const = default;
};

struct BenchReport {
  int runs = 0;
  std::uint64_t seed = 0;
  bool alternatives = false;
  std::vector<int> groups;
  std::vector<BenchCell> cells;  // group-major, variants in kAllVariants order
  std::vector<GroupComparison> astar_vs_ga;
  std::array<int, 4> distinct_paths{};  // per variant, across all groups
  bool operator==(const BenchReport&) const = default;
};

BenchReport run_bench(const GlobalEnv& env, const PlanRequest& base,
                      const std::vector<int>& groups, int runs,
                      const WearState& wear);

void emit_csv(const BenchReport& report, std::ostream& out);
void emit_json(const BenchReport& report, std::ostream& out);
BenchReport report_from_json(const std::string& text);

}  // namespace tendon
