#include "tendonplan/fitness.hpp"

#include <stdexcept>
#include <string>

namespace tendon {

namespace {

int moved_axis(const Node& from, const Node& to) { return from.i != to.i ? 0 : 1; }

double motor_edge_term(int section, const Node& from, const Node& to,
                       const WearState& wear) {
  const int motor = motor_for_axis(section, moved_axis(from, to));
  const double accumulated = static_cast<double>(wear.motor_steps(motor));
  const double wear_factor = 1.0 + accumulated / kMotorStepsRef;
  return wear_factor * kStepSpacing / kMotorStepsRef;
}

double mechanical_edge_term(int section, const Node& from, const Node& to,
                            const WearState& wear) {
  const auto stored = wear.segment_use(section, from.id, to.id);
  return (static_cast<double>(stored) + 1.0) / kSegmentUseRef;
}

}  // namespace

double f_distance(const SectionEnv& env, const Path& path) {
  require_valid_path(env, path);
  double steps = 0.0;
  for (std::size_t n = 1; n < path.nodes.size(); ++n) {
    steps += euclidean(env, path.nodes[n - 1], path.nodes[n]);
  }
  return steps / kDistanceRef;
}

double f_motor(const SectionEnv& env, const Path& path, const WearState& wear) {
  require_valid_path(env, path);
  double cost = 0.0;
  for (std::size_t n = 1; n < path.nodes.size(); ++n) {
    cost += motor_edge_term(path.section, env.node(path.nodes[n - 1]),
                            env.node(path.nodes[n]), wear);
  }
  return cost;
}

double f_mechanical(const SectionEnv& env, const Path& path, const WearState& wear) {
  require_valid_path(env, path);
  double cost = 0.0;
  for (std::size_t n = 1; n < path.nodes.size(); ++n) {
    cost += mechanical_edge_term(path.section, env.node(path.nodes[n - 1]),
                                 env.node(path.nodes[n]), wear);
  }
  return cost;
}

double f_accuracy(const SectionEnv& env, const Path& path, int intended_goal) {
  require_valid_path(env, path);
  return euclidean(env, path.nodes.back(), intended_goal) / kDistanceRef;
}

FitnessBreakdown multi_fitness(const SectionEnv& env, const Path& path,
                               const CriteriaWeights& weights, const WearState& wear,
                               int intended_goal) {
  FitnessBreakdown out;
  out.distance = f_distance(env, path);
  out.motor = f_motor(env, path, wear);
  out.mechanical = f_mechanical(env, path, wear);
  out.accuracy = f_accuracy(env, path, intended_goal);
  out.total = weights.w.dot(out.components());
  return out;
}

double edge_cost(const SectionEnv& env, int section, int a, int b,
                 const CriteriaWeights& weights, const WearState& wear) {
  if (!env.adjacent(a, b)) {
    throw std::invalid_argument("edge_cost: nodes " + std::to_string(a) + " and " +
                                std::to_string(b) + " are not adjacent");
  }
  const Node& from = env.node(a);
  const Node& to = env.node(b);
  return weights[kDistance] * euclidean(from, to) / kDistanceRef +
         weights[kMotorDamage] * motor_edge_term(section, from, to, wear) +
         weights[kMechanicalDamage] * mechanical_edge_term(section, from, to, wear);
}

double path_edge_cost(const SectionEnv& env, const Path& path,
                      const CriteriaWeights& weights, const WearState& wear) {
  require_valid_path(env, path);
  double cost = 0.0;
  for (std::size_t n = 1; n < path.nodes.size(); ++n) {
    cost += edge_cost(env, path.section, path.nodes[n - 1], path.nodes[n], weights, wear);
  }
  return cost;
}

}  // namespace tendon
