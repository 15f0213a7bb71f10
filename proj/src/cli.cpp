#include "tendonplan/cli.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "tendonplan/ahp.hpp"
#include "tendonplan/bench.hpp"
#include "tendonplan/wear.hpp"

namespace tendon {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string::size_type from = 0;
  for (;;) {
    const auto at = text.find(sep, from);
    if (at == std::string::npos) {
      parts.push_back(text.substr(from));
      return parts;
    }
    parts.push_back(text.substr(from, at - from));
    from = at + 1;
  }
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t pos = 0;
    const int value = std::stoi(text, &pos, 10);
    if (pos == text.size()) {
      return value;
    }
  } catch (const std::exception&) {
  }
  throw std::invalid_argument(what + ": expected an integer, got '" + text +
                              "'");
}

std::pair<int, int> parse_node_pair(const std::string& text,
                                    const std::string& what) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) {
    throw std::invalid_argument(what + ": expected start:goal, got '" + text +
                                "'");
  }
  return {parse_int(parts[0], what), parse_int(parts[1], what)};
}

std::vector<int> parse_int_list(const std::string& text,
                                const std::string& what) {
  std::vector<int> values;
  for (const std::string& part : split(text, ',')) {
    values.push_back(parse_int(part, what));
  }
  return values;
}

std::array<bool, kCriteriaCount> parse_priorities(const std::string& text) {
  std::array<bool, kCriteriaCount> flags{};
  for (const std::string& part : split(text, ',')) {
    int idx = -1;
    if (part == "d") {
      idx = kDistance;
    } else if (part == "m") {
      idx = kMotorDamage;
    } else if (part == "w") {
      idx = kMechanicalDamage;
    } else if (part == "a") {
      idx = kAccuracy;
    } else {
      throw std::invalid_argument(
          "--priorities: unknown criterion '" + part +
          "' (use d, m, w, a for distance, motor damage, mechanical damage, "
          "accuracy)");
    }
    if (flags[static_cast<std::size_t>(idx)]) {
      throw std::invalid_argument("--priorities: criterion '" + part +
                                  "' listed twice");
    }
    flags[static_cast<std::size_t>(idx)] = true;
  }
  return flags;
}

std::uint64_t parse_seed_text(const std::string& text,
                              const std::string& what) {
  if (!text.empty() && text[0] != '-') {
    try {
      std::size_t pos = 0;
      const unsigned long long value = std::stoull(text, &pos, 10);
      if (pos == text.size()) {
        return value;
      }
    } catch (const std::exception&) {
    }
  }
  throw std::invalid_argument(what + ": expected a non-negative integer, got '" +
                              text + "'");
}

std::uint64_t resolve_seed(bool seed_given, std::uint64_t seed_flag) {
  if (seed_given) {
    return seed_flag;
  }
  if (const char* env = std::getenv("TENDONPLAN_SEED")) {
    return parse_seed_text(env, "TENDONPLAN_SEED");
  }
  return 0;
}

void write_output(const std::string& text, const std::string& path,
                  std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  file << text;
  file.flush();
  if (!file) {
    throw std::runtime_error("failed writing '" + path + "'");
  }
}

json breakdown_json(const FitnessBreakdown& f) {
  return json{{"distance", f.distance},
              {"motor", f.motor},
              {"mechanical", f.mechanical},
              {"accuracy", f.accuracy},
              {"total", f.total}};
}

json weights_values_json(const CriteriaWeights& w) {
  json j = json::object();
  for (int c = 0; c < kCriteriaCount; ++c) {
    j[kCriterionNames[static_cast<std::size_t>(c)]] = w[c];
  }
  return j;
}

struct WeightArgs {
  std::optional<int> group;
  std::string priorities;
  bool raw_equal = false;
};

struct ResolvedWeights {
  CriteriaWeights w;
  std::array<bool, kCriteriaCount> flags{};
};

ResolvedWeights resolve_weights(const WeightArgs& args,
                                std::optional<int> default_group) {
  std::optional<int> group = args.group;
  std::array<bool, kCriteriaCount> flags{};
  if (!args.priorities.empty()) {
    flags = parse_priorities(args.priorities);
  } else {
    if (!group) {
      if (!default_group) {
        throw std::invalid_argument(
            "weights: provide --group N or --priorities LIST");
      }
      group = default_group;
    }
    flags = group_priorities(*group);
  }
  const bool all = flags[0] && flags[1] && flags[2] && flags[3];
  if (args.raw_equal && !all) {
    throw std::invalid_argument(
        "--raw-equal-weights applies only when all four criteria are "
        "prioritized (group 15)");
  }
  ResolvedWeights resolved;
  resolved.flags = flags;
  if (args.raw_equal) {
    resolved.w.w = Eigen::Vector4d::Ones();
  } else {
    resolved.w = weights(matrix_from_priorities(flags));
  }
  resolved.w.group_index = group;
  return resolved;
}

std::string env_csv(const SectionEnv& env) {
  std::ostringstream out;
  out << "id,i,j,x_steps,y_steps,neighbors\n";
  for (const Node& n : env.nodes()) {
    out << n.id << ',' << n.i << ',' << n.j << ','
        << static_cast<long long>(n.steps.x()) << ','
        << static_cast<long long>(n.steps.y()) << ',';
    const auto& nbrs = env.neighbors(n.id);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      if (k > 0) {
        out << ';';
      }
      out << nbrs[k];
    }
    out << "\n";
  }
  return out.str();
}

std::string env_summary(const GlobalEnv& env) {
  std::size_t degree_sum = 0;
  for (const Node& n : env.lower.nodes()) {
    degree_sum += env.lower.neighbors(n.id).size();
  }
  std::ostringstream out;
  out << "nodes: " << env.lower.size() << "\n"
      << "edges: " << degree_sum / 2 << "\n"
      << "composite_states: " << env.composite_count << "\n";
  return out.str();
}

json section_result_json(const SectionResult& r, int start) {
  return json{{"start", start},
              {"intended_goal", r.intended_goal},
              {"chosen_goal", r.chosen_goal},
              {"path", r.plan.path.nodes},
              {"fitness", breakdown_json(r.plan.fitness)},
              {"edge_cost_total", r.plan.edge_cost_total}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Multi-criteria resilient path planning for a two-section "
      "tendon-driven continuum robot"};
  app.name("tendonplan");
  app.require_subcommand(1);

  std::string out_path;

  // env
  auto* env_cmd = app.add_subcommand("env", "Inspect the section lattice");
  std::string env_action;
  bool env_dump = false;
  env_cmd->add_option("action", env_action, "Optional action: dump")
      ->check(CLI::IsMember({"dump"}));
  env_cmd->add_flag("--dump", env_dump, "Emit the node table as CSV");
  env_cmd->add_option("--out", out_path, "Write output to a file");

  // weights
  auto* weights_cmd =
      app.add_subcommand("weights", "Derive criteria weights and consistency");
  WeightArgs weight_args;
  int group_flag = 0;
  std::string priorities_flag;
  auto* group_opt =
      weights_cmd->add_option("--group", group_flag,
                              "Criteria-combination group (1-15, Table rows)");
  auto* priorities_opt = weights_cmd->add_option(
      "--priorities", priorities_flag,
      "Comma-separated prioritized criteria from {d,m,w,a}");
  group_opt->excludes(priorities_opt);
  bool raw_equal = false;
  weights_cmd->add_flag("--raw-equal-weights", raw_equal,
                        "Report the unnormalized (1,1,1,1) vector for the "
                        "all-criteria group");
  weights_cmd->add_option("--out", out_path, "Write output to a file");

  // wear
  auto* wear_cmd = app.add_subcommand("wear", "Inspect or update the wear store");
  wear_cmd->require_subcommand(1);
  std::string wear_file = "wear.json";
  auto* wear_show = wear_cmd->add_subcommand("show", "Print the wear store");
  wear_show->add_option("--wear-file", wear_file, "Wear store path")
      ->capture_default_str();
  wear_show->add_option("--out", out_path, "Write output to a file");
  auto* wear_apply =
      wear_cmd->add_subcommand("apply", "Record a traversed path");
  int apply_section = kLowerSection;
  std::string apply_path_arg;
  wear_apply->add_option("--section", apply_section, "Section id (0 or 1)")
      ->required();
  wear_apply
      ->add_option("--path", apply_path_arg, "Comma-separated node ids")
      ->required();
  wear_apply->add_option("--wear-file", wear_file, "Wear store path")
      ->capture_default_str();
  wear_apply->add_option("--out", out_path, "Write output to a file");

  // shared planner options
  std::string algo_flag = "astar";
  std::string lower_flag = "50:3";
  std::string upper_flag = "47:14";
  bool alternatives = false;
  std::uint64_t seed_flag = 0;
  GaConfig ga_defaults;
  int population = ga_defaults.population_size;
  int generations = ga_defaults.generations;
  double mutation_rate = ga_defaults.mutation_rate;
  int max_len = ga_defaults.max_len;

  const auto add_planner_options = [&](CLI::App* cmd) {
    cmd->add_option("--lower", lower_flag,
                    "Lower-section start:goal node ids")
        ->capture_default_str();
    cmd->add_option("--upper", upper_flag,
                    "Upper-section start:goal node ids")
        ->capture_default_str();
    cmd->add_flag("--alternatives", alternatives,
                  "Also plan to the 3 nearest alternative goals and keep the "
                  "best total");
    cmd->add_option("--seed", seed_flag,
                    "RNG seed (default: TENDONPLAN_SEED or 0)");
    cmd->add_option("--wear-file", wear_file, "Wear store path")
        ->capture_default_str();
    cmd->add_option("--population", population, "GA population size")
        ->capture_default_str();
    cmd->add_option("--generations", generations, "GA generations")
        ->capture_default_str();
    cmd->add_option("--mutation-rate", mutation_rate, "GA mutation rate")
        ->capture_default_str();
    cmd->add_option("--max-len", max_len, "GA chromosome edge budget")
        ->capture_default_str();
    cmd->add_option("--out", out_path, "Write output to a file");
  };

  // plan
  auto* plan_cmd = app.add_subcommand("plan", "Plan both section paths");
  plan_cmd->add_option("--algo", algo_flag,
                       "astar, astar-classical, ga or ga-classical")
      ->capture_default_str();
  auto* plan_group_opt = plan_cmd->add_option(
      "--group", group_flag, "Criteria-combination group (default 15)");
  auto* plan_priorities_opt = plan_cmd->add_option(
      "--priorities", priorities_flag,
      "Comma-separated prioritized criteria from {d,m,w,a}");
  plan_group_opt->excludes(plan_priorities_opt);
  plan_cmd->add_flag("--raw-equal-weights", raw_equal,
                     "Use the unnormalized (1,1,1,1) weight vector");
  bool timing = false;
  plan_cmd->add_flag("--timing", timing, "Include elapsed wall time");
  add_planner_options(plan_cmd);

  // bench
  auto* bench_cmd =
      app.add_subcommand("bench", "Compare algorithm variants across groups");
  std::string groups_flag;
  int runs = 100;
  std::string format = "csv";
  bench_cmd->add_option("--groups", groups_flag,
                        "Comma-separated group ids (default 1..15)");
  bench_cmd->add_option("--runs", runs, "Repetitions per cell")
      ->capture_default_str();
  bench_cmd->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  add_planner_options(bench_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    const GlobalEnv genv = build_global_env();

    if (app.got_subcommand(env_cmd)) {
      const bool dump = env_dump || env_action == "dump";
      write_output(dump ? env_csv(genv.lower) : env_summary(genv), out_path,
                   out);
      return 0;
    }

    if (app.got_subcommand(weights_cmd)) {
      weight_args.group = group_opt->count() > 0
                              ? std::optional<int>(group_flag)
                              : std::nullopt;
      weight_args.priorities = priorities_flag;
      weight_args.raw_equal = raw_equal;
      const ResolvedWeights resolved =
          resolve_weights(weight_args, std::nullopt);
      const ConsistencyResult c =
          consistency(matrix_from_priorities(resolved.flags));
      json j;
      j["group"] =
          resolved.w.group_index ? json(*resolved.w.group_index) : json();
      json pr = json::object();
      for (int i = 0; i < kCriteriaCount; ++i) {
        pr[kCriterionNames[static_cast<std::size_t>(i)]] =
            resolved.flags[static_cast<std::size_t>(i)];
      }
      j["priorities"] = pr;
      j["weights"] = weights_values_json(resolved.w);
      j["raw_equal"] = raw_equal;
      j["lambda_max"] = c.lambda_max;
      j["ci"] = c.ci;
      j["cr"] = c.cr ? json(*c.cr) : json();
      write_output(j.dump(2) + "\n", out_path, out);
      return 0;
    }

    if (app.got_subcommand(wear_cmd)) {
      if (wear_cmd->got_subcommand(wear_show)) {
        const WearState state = load_wear(wear_file, genv.lower);
        write_output(to_json_string(state), out_path, out);
        return 0;
      }
      const SectionEnv& senv = genv.section(apply_section);
      const Path path{apply_section,
                      parse_int_list(apply_path_arg, "--path")};
      const WearState state = load_wear(wear_file, genv.lower);
      const WearState next = apply_path(senv, state, path);
      save_wear(next, wear_file);
      write_output(to_json_string(next), out_path, out);
      return 0;
    }

    if (app.got_subcommand(plan_cmd)) {
      weight_args.group = plan_group_opt->count() > 0
                              ? std::optional<int>(group_flag)
                              : std::nullopt;
      weight_args.priorities = priorities_flag;
      weight_args.raw_equal = raw_equal;
      const ResolvedWeights resolved = resolve_weights(weight_args, 15);

      PlanRequest req;
      req.algo = parse_variant(algo_flag);
      std::tie(req.lower_start, req.lower_goal) =
          parse_node_pair(lower_flag, "--lower");
      std::tie(req.upper_start, req.upper_goal) =
          parse_node_pair(upper_flag, "--upper");
      req.weights = resolved.w;
      req.use_alternatives = alternatives;
      req.rng_seed = resolve_seed(plan_cmd->count("--seed") > 0, seed_flag);
      req.ga.population_size = population;
      req.ga.generations = generations;
      req.ga.mutation_rate = mutation_rate;
      req.ga.max_len = max_len;

      const WearState wear = load_wear(wear_file, genv.lower);
      const PlanResult res = plan(genv, req, wear);

      json j;
      j["algo"] = algo_name(req.algo.algo);
      j["mode"] = mode_name(req.algo.mode);
      j["group"] =
          resolved.w.group_index ? json(*resolved.w.group_index) : json();
      j["weights"] = weights_values_json(req.weights);
      j["alternatives"] = req.use_alternatives;
      j["seed"] = req.rng_seed;
      j["lower"] = section_result_json(res.lower, req.lower_start);
      j["upper"] = section_result_json(res.upper, req.upper_start);
      j["fitness"] = breakdown_json(res.fitness);
      if (timing) {
        j["elapsed_us"] = res.elapsed_us;
      }
      write_output(j.dump(2) + "\n", out_path, out);
      return 0;
    }

    // bench
    std::vector<int> groups;
    if (groups_flag.empty()) {
      for (int g = 1; g <= kGroupCount; ++g) {
        groups.push_back(g);
      }
    } else {
      groups = parse_int_list(groups_flag, "--groups");
    }
    PlanRequest base;
    std::tie(base.lower_start, base.lower_goal) =
        parse_node_pair(lower_flag, "--lower");
    std::tie(base.upper_start, base.upper_goal) =
        parse_node_pair(upper_flag, "--upper");
    base.use_alternatives = alternatives;
    base.rng_seed = resolve_seed(bench_cmd->count("--seed") > 0, seed_flag);
    base.ga.population_size = population;
    base.ga.generations = generations;
    base.ga.mutation_rate = mutation_rate;
    base.ga.max_len = max_len;

    const WearState wear = load_wear(wear_file, genv.lower);
    const BenchReport report = run_bench(genv, base, groups, runs, wear);
    std::ostringstream payload;
    if (format == "csv") {
      emit_csv(report, payload);
    } else {
      emit_json(report, payload);
    }
    write_output(payload.str(), out_path, out);
    return 0;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace tendon
