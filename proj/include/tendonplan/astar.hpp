#pragma once

#include <functional>
#include <vector>

#include "tendonplan/fitness.hpp"

namespace tendon {

/// improved = multi-fitness edge costs, classical = plain Euclidean distance.
enum class PlanMode { improved, classical };

/// Cost of traversing the edge (from, to).
using EdgeCostFn = std::function<double(int from, int to)>;
/// Estimated remaining cost from a node to the goal.
using HeuristicFn = std::function<double(int node)>;

struct SearchStats {
  int expanded = 0;
  int reopened = 0;
};

struct SearchResult {
  std::vector<int> nodes;
  double cost = 0.0;
  SearchStats stats;
};

/// Best-first search over the section graph:
///   1. open the start node with f(s) = h(s);
///   2. pop the open node with the smallest f (ties: smaller g, then id);
///   3. stop when the goal is popped;
///   4. close the node and enumerate its neighbours;
///   5. compute their tentative costs;
///   6. open unseen neighbours;
///   7. reopen closed neighbours whose recorded cost improves;
///   8. repeat from 2.
/// Throws std::runtime_error if the goal is unreachable.
SearchResult astar_search(const SectionEnv& env, int start, int goal,
                          const EdgeCostFn& edge, const HeuristicFn& heuristic);

/// Distance-term heuristic for the multi-fitness cost. Admissible and
/// consistent: every edge costs at least its weighted distance share.
double astar_heuristic(const SectionEnv& env, int node, int goal,
                       const CriteriaWeights& weights);

/// Plans start -> goal for one section. The returned breakdown is always
/// evaluated under `weights`; classical mode merely searches with plain
/// Euclidean costs.
SectionPlan run_astar(const SectionEnv& env, int section, int start, int goal,
                      const CriteriaWeights& weights, const WearState& wear,
                      PlanMode mode = PlanMode::improved);

}  // namespace tendon
