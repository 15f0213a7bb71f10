#include "tendonplan/env.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace tendon {

namespace {
constexpr int kSide = 2 * kLatticeRadius + 1;

int coord_slot(int i, int j) {
  return (i + kLatticeRadius) * kSide + (j + kLatticeRadius);
}

bool in_lattice(int i, int j) {
  return std::abs(i) + std::abs(j) <= kLatticeRadius;
}
}  // namespace

SectionEnv::SectionEnv() : coord_index_(kSide * kSide, -1) {
  // Row-major numbering: j from +radius down to -radius, i ascending.
  for (int j = kLatticeRadius; j >= -kLatticeRadius; --j) {
    const int span = kLatticeRadius - std::abs(j);
    for (int i = -span; i <= span; ++i) {
      Node n;
      n.id = static_cast<int>(nodes_.size());
      n.i = i;
      n.j = j;
      n.steps = Eigen::Vector2d(kStepSpacing * i, kStepSpacing * j);
      coord_index_[coord_slot(i, j)] = n.id;
      nodes_.push_back(n);
    }
  }

  adjacency_.resize(nodes_.size());
  constexpr int di[4] = {1, -1, 0, 0};
  constexpr int dj[4] = {0, 0, 1, -1};
  for (const Node& n : nodes_) {
    for (int d = 0; d < 4; ++d) {
      const int ni = n.i + di[d];
      const int nj = n.j + dj[d];
      if (!in_lattice(ni, nj)) continue;
      adjacency_[n.id].push_back(coord_index_[coord_slot(ni, nj)]);
    }
    std::sort(adjacency_[n.id].begin(), adjacency_[n.id].end());
  }
}

const Node& SectionEnv::node(int id) const {
  if (!valid_id(id)) {
    throw std::invalid_argument("unknown node id " + std::to_string(id));
  }
  return nodes_[static_cast<std::size_t>(id)];
}

const std::vector<int>& SectionEnv::neighbors(int id) const {
  if (!valid_id(id)) {
    throw std::invalid_argument("unknown node id " + std::to_string(id));
  }
  return adjacency_[static_cast<std::size_t>(id)];
}

bool SectionEnv::adjacent(int a, int b) const {
  const auto& adj = neighbors(a);
  return std::binary_search(adj.begin(), adj.end(), b) && valid_id(b);
}

std::optional<int> SectionEnv::id_at(int i, int j) const {
  if (!in_lattice(i, j)) return std::nullopt;
  const int id = coord_index_[coord_slot(i, j)];
  if (id < 0) return std::nullopt;
  return id;
}

const SectionEnv& GlobalEnv::section(int section_id) const {
  if (section_id == kLowerSection) return lower;
  if (section_id == kUpperSection) return upper;
  throw std::invalid_argument("unknown section id " + std::to_string(section_id));
}

SectionEnv build_section_env() { return SectionEnv(); }

GlobalEnv build_global_env() {
  GlobalEnv env;
  env.lower = build_section_env();
  env.upper = build_section_env();
  env.composite_count = env.lower.size() * env.upper.size();
  return env;
}

double euclidean(const Node& a, const Node& b) {
  return (a.steps - b.steps).norm();
}

double euclidean(const SectionEnv& env, int a, int b) {
  return euclidean(env.node(a), env.node(b));
}

std::vector<int> alternative_goals(const SectionEnv& env, int goal, int k) {
  const Node& g = env.node(goal);
  if (k < 0 || k >= env.size()) {
    throw std::invalid_argument("alternative count out of range: " +
                                std::to_string(k));
  }
  std::vector<std::pair<double, int>> ranked;
  ranked.reserve(static_cast<std::size_t>(env.size()) - 1);
  for (const Node& n : env.nodes()) {
    if (n.id == goal) continue;
    ranked.emplace_back(euclidean(n, g), n.id);
  }
  std::sort(ranked.begin(), ranked.end());
  std::vector<int> result;
  result.reserve(static_cast<std::size_t>(k));
  for (int idx = 0; idx < k; ++idx) {
    result.push_back(ranked[static_cast<std::size_t>(idx)].second);
  }
  return result;
}

bool is_valid_path(const SectionEnv& env, const Path& path) {
  if (path.section != kLowerSection && path.section != kUpperSection) return false;
  if (path.nodes.empty()) return false;
  for (int id : path.nodes) {
    if (!env.valid_id(id)) return false;
  }
  for (std::size_t n = 1; n < path.nodes.size(); ++n) {
    if (!env.adjacent(path.nodes[n - 1], path.nodes[n])) return false;
  }
  return true;
}

void require_valid_path(const SectionEnv& env, const Path& path) {
  if (path.section != kLowerSection && path.section != kUpperSection) {
    throw std::invalid_argument("invalid section id " +
                                std::to_string(path.section));
  }
  if (path.nodes.empty()) {
    throw std::invalid_argument("path must contain at least one node");
  }
  for (int id : path.nodes) {
    if (!env.valid_id(id)) {
      throw std::invalid_argument("path references unknown node id " +
                                  std::to_string(id));
    }
  }
  for (std::size_t n = 1; n < path.nodes.size(); ++n) {
    if (!env.adjacent(path.nodes[n - 1], path.nodes[n])) {
      throw std::invalid_argument(
          "path nodes " + std::to_string(path.nodes[n - 1]) + " and " +
          std::to_string(path.nodes[n]) + " are not adjacent");
    }
  }
}

int graph_distance(const SectionEnv& env, int start, int goal) {
  const Node& s = env.node(start);
  const Node& g = env.node(goal);
  // 4-neighbourhood on a convex taxicab ball: hop count is the L1 distance.
  return std::abs(s.i - g.i) + std::abs(s.j - g.j);
}

std::vector<int> bfs_shortest_path(const SectionEnv& env, int start, int goal) {
  env.node(start);
  env.node(goal);
  std::vector<int> parent(static_cast<std::size_t>(env.size()), -1);
  std::vector<char> seen(static_cast<std::size_t>(env.size()), 0);
  std::deque<int> queue{start};
  seen[static_cast<std::size_t>(start)] = 1;
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    if (cur == goal) break;
    for (int nb : env.neighbors(cur)) {  // ascending ids: lowest-id tie-break
      if (seen[static_cast<std::size_t>(nb)]) continue;
      seen[static_cast<std::size_t>(nb)] = 1;
      parent[static_cast<std::size_t>(nb)] = cur;
      queue.push_back(nb);
    }
  }
  std::vector<int> path;
  for (int cur = goal; cur != -1; cur = parent[static_cast<std::size_t>(cur)]) {
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace tendon
