#include "tendonplan/ga.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tendon {

namespace {

constexpr double kSelectionEps = 1e-9;
constexpr int kWalkRetries = 64;

int edge_count(const std::vector<int>& nodes) {
  return static_cast<int>(nodes.size()) - 1;
}

void check_config(const GaConfig& cfg) {
  if (cfg.population_size < 2) {
    throw std::invalid_argument("ga: population_size must be at least 2");
  }
  if (cfg.generations < 1) {
    throw std::invalid_argument("ga: generations must be at least 1");
  }
  if (cfg.mutation_rate < 0.0 || cfg.mutation_rate > 1.0) {
    throw std::invalid_argument("ga: mutation_rate must lie in [0, 1]");
  }
  if (cfg.max_len < 0) {
    throw std::invalid_argument("ga: max_len must be non-negative");
  }
}

std::vector<int> bounded_goal_walk(const SectionEnv& env, int start, int goal,
                                   int max_len, Rng& rng) {
  for (int attempt = 0; attempt < kWalkRetries; ++attempt) {
    std::vector<int> walk = loop_erased_walk(env, start, goal, rng);
    if (edge_count(walk) <= max_len) {
      return walk;
    }
  }
  return bfs_shortest_path(env, start, goal);
}

std::size_t best_index(const std::vector<Chromosome>& population) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < population.size(); ++i) {
    if (population[i].fitness.total < population[best].fitness.total) {
      best = i;
    }
  }
  return best;
}

std::size_t worst_index(const std::vector<Chromosome>& population) {
  std::size_t worst = 0;
  for (std::size_t i = 1; i < population.size(); ++i) {
    if (population[i].fitness.total > population[worst].fitness.total) {
      worst = i;
    }
  }
  return worst;
}

}  // namespace

std::vector<int> loop_erased_walk(const SectionEnv& env, int start, int goal,
                                  Rng& rng) {
  env.node(start);
  env.node(goal);
  std::vector<int> walk{start};
  std::vector<int> pos(static_cast<std::size_t>(env.size()), -1);
  pos[static_cast<std::size_t>(start)] = 0;
  while (walk.back() != goal) {
    const auto& nbrs = env.neighbors(walk.back());
    const int next = nbrs[uniform_index(rng, nbrs.size())];
    const auto at = pos[static_cast<std::size_t>(next)];
    if (at >= 0) {
      for (std::size_t k = static_cast<std::size_t>(at) + 1; k < walk.size();
           ++k) {
        pos[static_cast<std::size_t>(walk[k])] = -1;
      }
      walk.resize(static_cast<std::size_t>(at) + 1);
    } else {
      pos[static_cast<std::size_t>(next)] = static_cast<int>(walk.size());
      walk.push_back(next);
    }
  }
  return walk;
}

std::vector<Chromosome> init_population(const SectionEnv& env, int section,
                                        int start, int goal,
                                        const GaConfig& cfg, Rng& rng) {
  check_config(cfg);
  env.node(start);
  env.node(goal);
  if (cfg.max_len > 0 && graph_distance(env, start, goal) > cfg.max_len) {
    throw std::invalid_argument("ga: max_len " + std::to_string(cfg.max_len) +
                                " is below the graph distance from " +
                                std::to_string(start) + " to " +
                                std::to_string(goal));
  }
  std::vector<Chromosome> population;
  population.reserve(static_cast<std::size_t>(cfg.population_size));
  for (int i = 0; i < cfg.population_size; ++i) {
    Chromosome c;
    c.path.section = section;
    if (cfg.max_len == 0 || start == goal) {
      c.path.nodes = {start};
    } else {
      c.path.nodes = bounded_goal_walk(env, start, goal, cfg.max_len, rng);
    }
    population.push_back(std::move(c));
  }
  return population;
}

std::size_t select_parent(const std::vector<Chromosome>& population, Rng& rng) {
  if (population.empty()) {
    throw std::invalid_argument("ga: cannot select from an empty population");
  }
  std::vector<double> cumulative(population.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < population.size(); ++i) {
    sum += 1.0 / (population[i].fitness.total + kSelectionEps);
    cumulative[i] = sum;
  }
  const double u = uniform_real01(rng) * sum;
  const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  const auto idx = static_cast<std::size_t>(it - cumulative.begin());
  return std::min(idx, population.size() - 1);
}

std::pair<Chromosome, Chromosome> crossover(const Chromosome& p1,
                                            const Chromosome& p2, int max_len,
                                            Rng& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> junctions;
  for (std::size_t i = 0; i < p1.path.nodes.size(); ++i) {
    for (std::size_t j = 0; j < p2.path.nodes.size(); ++j) {
      if (p1.path.nodes[i] == p2.path.nodes[j]) {
        junctions.emplace_back(i, j);
      }
    }
  }
  // Both parents share the start node, so at least (0, 0) exists.
  const auto [i, j] = junctions[uniform_index(rng, junctions.size())];

  const auto splice = [](const std::vector<int>& head, std::size_t cut,
                         const std::vector<int>& tail, std::size_t from) {
    std::vector<int> nodes(head.begin(),
                           head.begin() + static_cast<std::ptrdiff_t>(cut) + 1);
    nodes.insert(nodes.end(),
                 tail.begin() + static_cast<std::ptrdiff_t>(from) + 1,
                 tail.end());
    return nodes;
  };

  Chromosome c1;
  c1.path.section = p1.path.section;
  c1.path.nodes = splice(p1.path.nodes, i, p2.path.nodes, j);
  if (edge_count(c1.path.nodes) > max_len) {
    c1.path.nodes = p1.path.nodes;
  }
  Chromosome c2;
  c2.path.section = p2.path.section;
  c2.path.nodes = splice(p2.path.nodes, j, p1.path.nodes, i);
  if (edge_count(c2.path.nodes) > max_len) {
    c2.path.nodes = p2.path.nodes;
  }
  return {std::move(c1), std::move(c2)};
}

Chromosome mutate(const SectionEnv& env, const Chromosome& c, int goal,
                  double rate, int max_len, Rng& rng) {
  if (uniform_real01(rng) >= rate) {
    return c;
  }
  const auto& nodes = c.path.nodes;
  if (nodes.size() < 2) {
    return c;
  }
  const std::size_t g = 1 + uniform_index(rng, nodes.size() - 1);
  const auto& nbrs = env.neighbors(nodes[g - 1]);
  const int replacement = nbrs[uniform_index(rng, nbrs.size())];

  std::vector<int> mutated(nodes.begin(),
                           nodes.begin() + static_cast<std::ptrdiff_t>(g));
  mutated.push_back(replacement);
  if (g + 1 < nodes.size() && env.adjacent(replacement, nodes[g + 1])) {
    mutated.insert(mutated.end(),
                   nodes.begin() + static_cast<std::ptrdiff_t>(g) + 1,
                   nodes.end());
  } else if (replacement != goal) {
    const std::vector<int> tail = loop_erased_walk(env, replacement, goal, rng);
    mutated.insert(mutated.end(), tail.begin() + 1, tail.end());
  }
  if (edge_count(mutated) > max_len) {
    return c;
  }
  Chromosome out;
  out.path.section = c.path.section;
  out.path.nodes = std::move(mutated);
  return out;
}

SectionPlan run_ga(const SectionEnv& env, int section, int start, int goal,
                   const CriteriaWeights& weights, const WearState& wear,
                   const GaConfig& cfg, PlanMode mode, GaTrace* trace) {
  CriteriaWeights selection = weights;
  if (mode == PlanMode::classical) {
    selection.w = Eigen::Vector4d::Zero();
    selection.w[kDistance] = 1.0;
    selection.group_index.reset();
  }

  Rng rng = make_rng(cfg.rng_seed);
  std::vector<Chromosome> population =
      init_population(env, section, start, goal, cfg, rng);
  const auto evaluate = [&](Chromosome& c) {
    c.fitness = multi_fitness(env, c.path, selection, wear, goal);
  };
  for (auto& c : population) {
    evaluate(c);
  }
  if (trace != nullptr) {
    trace->best_total_per_generation.clear();
    trace->best_total_per_generation.push_back(
        population[best_index(population)].fitness.total);
  }

  for (int gen = 0; gen < cfg.generations; ++gen) {
    const Chromosome elite = population[best_index(population)];
    std::vector<Chromosome> offspring;
    offspring.reserve(population.size());
    while (offspring.size() < population.size()) {
      const auto& p1 = population[select_parent(population, rng)];
      const auto& p2 = population[select_parent(population, rng)];
      auto [c1, c2] = crossover(p1, p2, cfg.max_len, rng);
      offspring.push_back(
          mutate(env, c1, goal, cfg.mutation_rate, cfg.max_len, rng));
      if (offspring.size() < population.size()) {
        offspring.push_back(
            mutate(env, c2, goal, cfg.mutation_rate, cfg.max_len, rng));
      }
    }
    for (auto& c : offspring) {
      evaluate(c);
    }
    const std::size_t worst = worst_index(offspring);
    if (elite.fitness.total < offspring[worst].fitness.total) {
      offspring[worst] = elite;
    }
    population = std::move(offspring);
    if (trace != nullptr) {
      trace->best_total_per_generation.push_back(
          population[best_index(population)].fitness.total);
    }
  }

  const Chromosome& best = population[best_index(population)];
  SectionPlan plan;
  plan.path = best.path;
  plan.fitness = multi_fitness(env, plan.path, weights, wear, goal);
  plan.edge_cost_total = path_edge_cost(env, plan.path, weights, wear);
  return plan;
}

}  // namespace tendon
