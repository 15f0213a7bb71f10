#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

namespace tendon {

/// Taxicab radius of the per-section lattice: {(i,j) : |i|+|j| <= radius}
/// holds exactly 61 points at radius 5.
inline constexpr int kLatticeRadius = 5;

/// Motor steps between adjacent lattice nodes.
inline constexpr double kStepSpacing = 70.0;

inline constexpr int kLowerSection = 0;
inline constexpr int kUpperSection = 1;
inline constexpr int kSectionCount = 2;

/// A reachable pose of one section. `steps` holds the motor-step coordinates
/// (kStepSpacing * i, kStepSpacing * j).
struct Node {
  int id = 0;
  int i = 0;
  int j = 0;
  Eigen::Vector2d steps{0.0, 0.0};
};

/// The discrete environment of one robot section: the 61-node diamond
/// lattice with 4-neighbourhood adjacency. Nodes are numbered row-major,
/// j descending then i ascending, ids 0..60. Immutable after construction.
class SectionEnv {
 public:
  SectionEnv();

  const std::vector<Node>& nodes() const { return nodes_; }
  int size() const { return static_cast<int>(nodes_.size()); }

  bool valid_id(int id) const { return id >= 0 && id < size(); }

  /// Throws std::invalid_argument on unknown ids.
  const Node& node(int id) const;

  /// Neighbor ids, sorted ascending.
  const std::vector<int>& neighbors(int id) const;

  bool adjacent(int a, int b) const;

  std::optional<int> id_at(int i, int j) const;

 private:
  std::vector<Node> nodes_;
  std::vector<std::vector<int>> adjacency_;
  // coord -> id lookup, indexed by (i + radius) * side + (j + radius)
  std::vector<int> coord_index_;
};

/// Both sections share one lattice layout.
struct GlobalEnv {
  SectionEnv lower;
  SectionEnv upper;
  int composite_count = 0;

  const SectionEnv& section(int section_id) const;
};

SectionEnv build_section_env();
GlobalEnv build_global_env();

/// Euclidean distance in motor-step units.
double euclidean(const Node& a, const Node& b);
double euclidean(const SectionEnv& env, int a, int b);

/// The k nodes nearest to `goal` (excluding it), ordered by (distance, id).
/// Throws std::invalid_argument on an unknown goal id or k >= node count.
std::vector<int> alternative_goals(const SectionEnv& env, int goal, int k = 3);

/// Ordered node sequence within one section. Valid paths have length >= 1
/// and adjacent consecutive nodes.
struct Path {
  int section = kLowerSection;
  std::vector<int> nodes;

  bool operator==(const Path&) const = default;
};

bool is_valid_path(const SectionEnv& env, const Path& path);

/// Throws std::invalid_argument describing the first violation.
void require_valid_path(const SectionEnv& env, const Path& path);

/// Hop count of the shortest path between two nodes (BFS).
int graph_distance(const SectionEnv& env, int start, int goal);

/// Shortest path by hop count, deterministic (lowest-id tie-breaking).
std::vector<int> bfs_shortest_path(const SectionEnv& env, int start, int goal);

}  // namespace tendon
