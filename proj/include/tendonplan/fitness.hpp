#pragma once

#include <Eigen/Core>

#include "tendonplan/ahp.hpp"
#include "tendonplan/env.hpp"
#include "tendonplan/wear.hpp"

namespace tendon {

/// Fixed normalization constants. Shared by every planner and oracle so
/// scores stay comparable and edge costs additive.
inline constexpr double kDistanceRef = 700.0;   // lattice diameter in motor steps
inline constexpr double kMotorStepsRef = 80000.0;  // 100 revolutions at 800 steps
inline constexpr double kSegmentUseRef = 100.0;

/// Normalized per-criterion costs and their weighted total. Lower is better.
struct FitnessBreakdown {
  double distance = 0.0;
  double motor = 0.0;
  double mechanical = 0.0;
  double accuracy = 0.0;
  double total = 0.0;

  Eigen::Vector4d components() const {
    return Eigen::Vector4d(distance, motor, mechanical, accuracy);
  }
};

/// Sum of Euclidean edge lengths over kDistanceRef.
double f_distance(const SectionEnv& env, const Path& path);

/// Wear-weighted incremental motor steps over kMotorStepsRef; each edge
/// costs (1 + accumulated/kMotorStepsRef) * spacing for its axis motor.
double f_motor(const SectionEnv& env, const Path& path, const WearState& wear);

/// Each traversed segment costs (stored use count + 1) / kSegmentUseRef.
double f_mechanical(const SectionEnv& env, const Path& path, const WearState& wear);

/// Endpoint error: distance from the path's last node to the intended goal,
/// over kDistanceRef.
double f_accuracy(const SectionEnv& env, const Path& path, int intended_goal);

/// The weighted multi-fitness: total = w . (f_distance, f_motor, f_mech,
/// f_accuracy).
FitnessBreakdown multi_fitness(const SectionEnv& env, const Path& path,
                               const CriteriaWeights& weights, const WearState& wear,
                               int intended_goal);

/// Per-edge additive share of the multi-fitness, accuracy excluded. Summed
/// over a path's edges and combined with w_accuracy * f_accuracy it
/// reproduces the multi-fitness total. Throws on non-adjacent pairs.
double edge_cost(const SectionEnv& env, int section, int a, int b,
                 const CriteriaWeights& weights, const WearState& wear);

/// Sum of edge_cost over a path's consecutive pairs.
double path_edge_cost(const SectionEnv& env, const Path& path,
                      const CriteriaWeights& weights, const WearState& wear);

/// A scored per-section plan as returned by the planners.
struct SectionPlan {
  Path path;
  FitnessBreakdown fitness;
  double edge_cost_total = 0.0;
};

}  // namespace tendon
