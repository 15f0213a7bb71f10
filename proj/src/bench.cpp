#include "tendonplan/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "tendonplan/rng.hpp"

namespace tendon {

namespace {

constexpr double kTotalTol = 1e-9;

SectionPlan plan_one(const SectionEnv& env, int section, int start, int goal,
                     const PlanRequest& req, const WearState& wear,
                     std::uint64_t seed) {
  if (req.algo.algo == Algo::astar) {
    return run_astar(env, section, start, goal, req.weights, wear,
                     req.algo.mode);
  }
  GaConfig cfg = req.ga;
  cfg.rng_seed = seed;
  return run_ga(env, section, start, goal, req.weights, wear, cfg,
                req.algo.mode);
}

SectionResult plan_section(const GlobalEnv& genv, int section, int start,
                           int intended_goal, const PlanRequest& req,
                           const WearState& wear) {
  const SectionEnv& env = genv.section(section);
  std::vector<int> candidates{intended_goal};
  if (req.use_alternatives) {
    const auto alts =
        alternative_goals(env, intended_goal, req.alternative_count);
    candidates.insert(candidates.end(), alts.begin(), alts.end());
  }

  SectionResult result;
  result.intended_goal = intended_goal;
  bool have = false;
  for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
    const int cand = candidates[idx];
    const std::uint64_t seed = seed_mix(req.rng_seed, section, idx);
    SectionPlan sub = plan_one(env, section, start, cand, req, wear, seed);
    // Score the candidate path against the goal the caller actually wants.
    sub.fitness = multi_fitness(env, sub.path, req.weights, wear,
                                intended_goal);
    if (!have || sub.fitness.total < result.plan.fitness.total) {
      result.plan = std::move(sub);
      result.chosen_goal = cand;
      have = true;
    }
  }
  return result;
}

double pct(int count, int runs) {
  return runs > 0 ? 100.0 * count / runs : 0.0;
}

nlohmann::json cell_to_json(const BenchCell& c) {
  return nlohmann::json{{"group", c.group},
                        {"algo", algo_name(c.variant.algo)},
                        {"mode", mode_name(c.variant.mode)},
                        {"runs", c.runs},
                        {"mean_time_us", c.mean_time_us},
                        {"best_pct", c.best_pct},
                        {"equal_pct", c.equal_pct}};
}

BenchCell cell_from_json(const nlohmann::json& j) {
  BenchCell c;
  c.group = j.at("group").get<int>();
  c.variant.algo =
      j.at("algo").get<std::string>() == "astar" ? Algo::astar : Algo::ga;
  c.variant.mode = j.at("mode").get<std::string>() == "improved"
                       ? PlanMode::improved
                       : PlanMode::classical;
  c.runs = j.at("runs").get<int>();
  c.mean_time_us = j.at("mean_time_us").get<double>();
  c.best_pct = j.at("best_pct").get<double>();
  c.equal_pct = j.at("equal_pct").get<double>();
  return c;
}

}  // namespace

std::string algo_name(Algo algo) {
  return algo == Algo::astar ? "astar" : "ga";
}

std::string mode_name(PlanMode mode) {
  return mode == PlanMode::improved ? "improved" : "classical";
}

std::string variant_name(const AlgoVariant& v) {
  std::string name = algo_name(v.algo);
  if (v.mode == PlanMode::classical) {
    name += "-classical";
  }
  return name;
}

AlgoVariant parse_variant(const std::string& name) {
  for (const AlgoVariant& v : kAllVariants) {
    if (variant_name(v) == name) {
      return v;
    }
  }
  throw std::invalid_argument("unknown algorithm '" + name +
                              "' (expected astar, astar-classical, ga or "
                              "ga-classical)");
}

PlanResult plan(const GlobalEnv& env, const PlanRequest& req,
                const WearState& wear) {
  const auto t0 = std::chrono::steady_clock::now();
  PlanResult result;
  result.lower = plan_section(env, kLowerSection, req.lower_start,
                              req.lower_goal, req, wear);
  result.upper = plan_section(env, kUpperSection, req.upper_start,
                              req.upper_goal, req, wear);
  const auto t1 = std::chrono::steady_clock::now();
  result.fitness.distance =
      result.lower.plan.fitness.distance + result.upper.plan.fitness.distance;
  result.fitness.motor =
      result.lower.plan.fitness.motor + result.upper.plan.fitness.motor;
  result.fitness.mechanical = result.lower.plan.fitness.mechanical +
                              result.upper.plan.fitness.mechanical;
  result.fitness.accuracy =
      result.lower.plan.fitness.accuracy + result.upper.plan.fitness.accuracy;
  result.fitness.total =
      result.lower.plan.fitness.total + result.upper.plan.fitness.total;
  result.elapsed_us =
      std::chrono::duration<double, std::micro>(t1 - t0).count();
  return result;
}

BenchReport run_bench(const GlobalEnv& env, const PlanRequest& base,
                      const std::vector<int>& groups, int runs,
                      const WearState& wear) {
  if (runs < 1) {
    throw std::invalid_argument("bench: runs must be at least 1");
  }

  BenchReport report;
  report.runs = runs;
  report.seed = base.rng_seed;
  report.alternatives = base.use_alternatives;
  report.groups = groups;

  std::array<std::set<std::vector<int>>, 4> seen_paths;
  for (const int group : groups) {
    PlanRequest req = base;
    req.weights = table_group_weights(group);

    // totals[v][r] and times[v][r] for this group
    std::array<std::vector<double>, 4> totals;
    std::array<std::vector<double>, 4> times;
    for (std::size_t v = 0; v < kAllVariants.size(); ++v) {
      req.algo = kAllVariants[v];
      totals[v].reserve(static_cast<std::size_t>(runs));
      times[v].reserve(static_cast<std::size_t>(runs));
      for (int run = 0; run < runs; ++run) {
        req.rng_seed = seed_mix(base.rng_seed, group, v, run);
        const PlanResult res = plan(env, req, wear);
        totals[v].push_back(res.fitness.total);
        times[v].push_back(res.elapsed_us);
        if (run == 0) {
          std::vector<int> key = res.lower.plan.path.nodes;
          key.push_back(-1);
          key.insert(key.end(), res.upper.plan.path.nodes.begin(),
                     res.upper.plan.path.nodes.end());
          seen_paths[v].insert(std::move(key));
        }
      }
    }

    std::array<int, 4> best_count{};
    std::array<int, 4> equal_count{};
    int astar_better = 0;
    int astar_equal = 0;
    int astar_worse = 0;
    for (int run = 0; run < runs; ++run) {
      const auto r = static_cast<std::size_t>(run);
      double best = totals[0][r];
      for (std::size_t v = 1; v < 4; ++v) {
        best = std::min(best, totals[v][r]);
      }
      for (std::size_t v = 0; v < 4; ++v) {
        if (totals[v][r] <= best + kTotalTol) {
          ++best_count[v];
        }
        if (std::abs(totals[v][r] - totals[0][r]) <= kTotalTol) {
          ++equal_count[v];
        }
      }
      const double diff = totals[2][r] - totals[0][r];  // improved GA - A*
      if (std::abs(diff) <= kTotalTol) {
        ++astar_equal;
      } else if (diff > 0.0) {
        ++astar_better;
      } else {
        ++astar_worse;
      }
    }

    for (std::size_t v = 0; v < 4; ++v) {
      BenchCell cell;
      cell.group = group;
      cell.variant = kAllVariants[v];
      cell.runs = runs;
      double sum = 0.0;
      for (const double t : times[v]) {
        sum += t;
      }
      cell.mean_time_us = sum / runs;
      cell.best_pct = pct(best_count[v], runs);
      cell.equal_pct = pct(equal_count[v], runs);
      report.cells.push_back(cell);
    }
    report.astar_vs_ga.push_back({group, pct(astar_better, runs),
                                  pct(astar_equal, runs),
                                  pct(astar_worse, runs)});
  }

  for (std::size_t v = 0; v < 4; ++v) {
    report.distinct_paths[v] = static_cast<int>(seen_paths[v].size());
  }
  return report;
}

void emit_csv(const BenchReport& report, std::ostream& out) {
  out << "group,algo,mode,runs,mean_time_us,best_pct,equal_pct,distinct_paths"
      << "\n";
  char buf[64];
  for (const BenchCell& cell : report.cells) {
    std::size_t v = 0;
    while (!(kAllVariants[v] == cell.variant)) {
      ++v;
    }
    out << cell.group << ',' << algo_name(cell.variant.algo) << ','
        << mode_name(cell.variant.mode) << ',' << cell.runs << ',';
    std::snprintf(buf, sizeof(buf), "%.3f", cell.mean_time_us);
    out << buf << ',';
    std::snprintf(buf, sizeof(buf), "%.2f", cell.best_pct);
    out << buf << ',';
    std::snprintf(buf, sizeof(buf), "%.2f", cell.equal_pct);
    out << buf << ',' << report.distinct_paths[v] << "\n";
  }
}

void emit_json(const BenchReport& report, std::ostream& out) {
  nlohmann::json j;
  j["runs"] = report.runs;
  j["seed"] = report.seed;
  j["alternatives"] = report.alternatives;
  j["groups"] = report.groups;
  j["cells"] = nlohmann::json::array();
  for (const BenchCell& cell : report.cells) {
    j["cells"].push_back(cell_to_json(cell));
  }
  j["astar_vs_ga"] = nlohmann::json::array();
  for (const GroupComparison& g : report.astar_vs_ga) {
    j["astar_vs_ga"].push_back({{"group", g.group},
                                {"astar_better_pct", g.astar_better_pct},
                                {"equal_pct", g.equal_pct},
                                {"astar_worse_pct", g.astar_worse_pct}});
  }
  j["distinct_paths"] = nlohmann::json::object();
  for (std::size_t v = 0; v < kAllVariants.size(); ++v) {
    j["distinct_paths"][variant_name(kAllVariants[v])] =
        report.distinct_paths[v];
  }
  out << j.dump(2) << "\n";
}

BenchReport report_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("bench report: ") + e.what());
  }
  try {
    BenchReport report;
    report.runs = j.at("runs").get<int>();
    report.seed = j.at("seed").get<std::uint64_t>();
    report.alternatives = j.at("alternatives").get<bool>();
    report.groups = j.at("groups").get<std::vector<int>>();
    for (const auto& cj : j.at("cells")) {
      report.cells.push_back(cell_from_json(cj));
    }
    for (const auto& gj : j.at("astar_vs_ga")) {
      GroupComparison g;
      g.group = gj.at("group").get<int>();
      g.astar_better_pct = gj.at("astar_better_pct").get<double>();
      g.equal_pct = gj.at("equal_pct").get<double>();
      g.astar_worse_pct = gj.at("astar_worse_pct").get<double>();
      report.astar_vs_ga.push_back(g);
    }
    for (std::size_t v = 0; v < kAllVariants.size(); ++v) {
      report.distinct_paths[v] =
          j.at("distinct_paths").at(variant_name(kAllVariants[v])).get<int>();
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("bench report: ") + e.what());
  }
}

}  // namespace tendon
