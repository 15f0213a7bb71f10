#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tendonplan/astar.hpp"
#include "tendonplan/fitness.hpp"
#include "tendonplan/rng.hpp"

namespace tendon {

struct Chromosome {
  Path path;
  FitnessBreakdown fitness;  // evaluated under the selection weights
};

struct GaConfig {
  int population_size = 50;
  int generations = 3;
  double mutation_rate = 0.1;
  int max_len = 40;  // edge budget per chromosome; 0 = single-node paths only
  std::uint64_t rng_seed = 0;
};

struct GaTrace {
  std::vector<double> best_total_per_generation;  // initial population first
};

/// Loop-erased random walk from start to goal. Every node appears once, so
/// the result is a simple start->goal path.
std::vector<int> loop_erased_walk(const SectionEnv& env, int start, int goal,
                                  Rng& rng);

/// Random simple start->goal paths within the edge budget. Walks that
/// overshoot max_len are redrawn; as a last resort the BFS shortest path is
/// used. Fitness fields are left zeroed.
std::vector<Chromosome> init_population(const SectionEnv& env, int section,
                                        int start, int goal,
                                        const GaConfig& cfg, Rng& rng);

/// Roulette selection: chromosome i is drawn with probability proportional
/// to 1 / (total_i + 1e-9). Returns the index of the selected chromosome.
std::size_t select_parent(const std::vector<Chromosome>& population, Rng& rng);

/// Single-point path crossover. A junction is a node pair (i, j) with
/// p1.nodes[i] == p2.nodes[j]; one junction is chosen uniformly at random
/// and the tails are swapped. A child exceeding max_len edges is replaced
/// by the parent contributing its head.
std::pair<Chromosome, Chromosome> crossover(const Chromosome& p1,
                                            const Chromosome& p2, int max_len,
                                            Rng& rng);

/// With probability `rate`, replaces one interior-or-final node by a random
/// neighbour of its predecessor. If that breaks the link to the successor
/// (or replaced the endpoint), the tail is rebuilt by a loop-erased walk to
/// the goal. A mutant exceeding max_len edges reverts to the input.
Chromosome mutate(const SectionEnv& env, const Chromosome& c, int goal,
                  double rate, int max_len, Rng& rng);

/// Evolves start->goal paths for one section. Classical mode selects on the
/// distance term alone; improved mode selects on the full weighted total.
/// The returned breakdown is always evaluated under `weights`.
SectionPlan run_ga(const SectionEnv& env, int section, int start, int goal,
                   const CriteriaWeights& weights, const WearState& wear,
                   const GaConfig& cfg, PlanMode mode = PlanMode::improved,
                   GaTrace* trace = nullptr);

}  // namespace tendon
