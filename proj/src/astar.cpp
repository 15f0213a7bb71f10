#include "tendonplan/astar.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace tendon {

namespace {

// (f, g, id); the queue pops the lexicographically smallest entry.
using OpenEntry = std::tuple<double, double, int>;

std::vector<int> reconstruct(const std::vector<int>& parent, int goal) {
  std::vector<int> nodes;
  for (int n = goal; n >= 0; n = parent[static_cast<std::size_t>(n)]) {
    nodes.push_back(n);
  }
  std::reverse(nodes.begin(), nodes.end());
  return nodes;
}

}  // namespace

SearchResult astar_search(const SectionEnv& env, int start, int goal,
                          const EdgeCostFn& edge, const HeuristicFn& heuristic) {
  env.node(start);
  env.node(goal);

  const auto n = static_cast<std::size_t>(env.size());
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> g(n, kInf);
  std::vector<int> parent(n, -1);
  std::vector<char> closed(n, 0);

  std::priority_queue<OpenEntry, std::vector<OpenEntry>, std::greater<>> open;
  g[static_cast<std::size_t>(start)] = 0.0;
  open.emplace(heuristic(start), 0.0, start);

  SearchResult result;
  while (!open.empty()) {
    const auto [f, gv, node] = open.top();
    open.pop();
    const auto ni = static_cast<std::size_t>(node);
    if (gv > g[ni]) {
      continue;  // stale entry superseded by a cheaper one
    }
    if (node == goal) {
      result.nodes = reconstruct(parent, goal);
      result.cost = gv;
      return result;
    }
    closed[ni] = 1;
    ++result.stats.expanded;
    for (int nb : env.neighbors(node)) {
      const auto bi = static_cast<std::size_t>(nb);
      const double tentative = gv + edge(node, nb);
      if (tentative < g[bi]) {
        if (closed[bi]) {
          closed[bi] = 0;
          ++result.stats.reopened;
        }
        g[bi] = tentative;
        parent[bi] = node;
        open.emplace(tentative + heuristic(nb), tentative, nb);
      }
    }
  }
  throw std::runtime_error("astar: goal " + std::to_string(goal) +
                           " unreachable from " + std::to_string(start));
}

double astar_heuristic(const SectionEnv& env, int node, int goal,
                       const CriteriaWeights& weights) {
  return weights[kDistance] * euclidean(env, node, goal) / kDistanceRef;
}

SectionPlan run_astar(const SectionEnv& env, int section, int start, int goal,
                      const CriteriaWeights& weights, const WearState& wear,
                      PlanMode mode) {
  EdgeCostFn edge_fn;
  HeuristicFn h_fn;
  if (mode == PlanMode::improved) {
    edge_fn = [&](int a, int b) {
      return edge_cost(env, section, a, b, weights, wear);
    };
    h_fn = [&](int n) { return astar_heuristic(env, n, goal, weights); };
  } else {
    edge_fn = [&](int a, int b) { return euclidean(env, a, b); };
    h_fn = [&](int n) { return euclidean(env, n, goal); };
  }

  const SearchResult found = astar_search(env, start, goal, edge_fn, h_fn);
  SectionPlan plan;
  plan.path = Path{section, found.nodes};
  plan.fitness = multi_fitness(env, plan.path, weights, wear, goal);
  plan.edge_cost_total = path_edge_cost(env, plan.path, weights, wear);
  return plan;
}

}  // namespace tendon
