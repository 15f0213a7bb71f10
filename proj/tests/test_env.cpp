#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "tendonplan/env.hpp"

using namespace tendon;

TEST_CASE("lattice matches the brute-force enumeration") {
  const SectionEnv env = build_section_env();
  const test::LatticeOracle oracle;

  REQUIRE(env.size() == 61);
  REQUIRE(oracle.coords().size() == 61);
  for (const Node& n : env.nodes()) {
    const auto [oi, oj] = oracle.coords()[static_cast<std::size_t>(n.id)];
    CHECK(n.i == oi);
    CHECK(n.j == oj);
    CHECK(n.steps.x() == doctest::Approx(70.0 * n.i));
    CHECK(n.steps.y() == doctest::Approx(70.0 * n.j));
    CHECK(env.neighbors(n.id) == oracle.neighbor_ids(n.id));
  }
}

TEST_CASE("composite state space counts 61 x 61") {
  const GlobalEnv env = build_global_env();
  CHECK(env.composite_count == 3721);
  CHECK(env.lower.size() == env.upper.size());
  for (const Node& n : env.lower.nodes()) {
    CHECK(env.upper.neighbors(n.id) == env.lower.neighbors(n.id));
  }
}

TEST_CASE("adjacency is symmetric and every edge spans 70 steps") {
  const SectionEnv env = build_section_env();
  int degree_sum = 0;
  for (const Node& n : env.nodes()) {
    for (int nb : env.neighbors(n.id)) {
      CHECK(env.adjacent(nb, n.id));
      CHECK(euclidean(env, n.id, nb) == doctest::Approx(70.0).epsilon(1e-12));
    }
    degree_sum += static_cast<int>(env.neighbors(n.id).size());
  }
  CHECK(degree_sum == 200);  // 100 undirected edges
}

TEST_CASE("graph is connected and graph_distance equals BFS hops") {
  const SectionEnv env = build_section_env();
  for (int start = 0; start < env.size(); ++start) {
    // plain BFS distances, independent of graph_distance's closed form
    std::vector<int> dist(61, -1);
    std::vector<int> queue{start};
    dist[static_cast<std::size_t>(start)] = 0;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (int nb : env.neighbors(queue[q])) {
        if (dist[static_cast<std::size_t>(nb)] < 0) {
          dist[static_cast<std::size_t>(nb)] =
              dist[static_cast<std::size_t>(queue[q])] + 1;
          queue.push_back(nb);
        }
      }
    }
    REQUIRE(queue.size() == 61);
    for (int goal = 0; goal < env.size(); ++goal) {
      CHECK(graph_distance(env, start, goal) ==
            dist[static_cast<std::size_t>(goal)]);
    }
  }
}

TEST_CASE("documented landmark ids") {
  const SectionEnv env = build_section_env();
  CHECK(env.id_at(0, 5) == 0);
  CHECK(env.id_at(1, 4) == 3);
  CHECK(env.id_at(0, 0) == 30);
  CHECK(env.id_at(5, 0) == 35);
  CHECK(env.id_at(-1, -2) == 47);
  CHECK(env.id_at(2, -2) == 50);
  CHECK(env.id_at(2, 2) == 14);
  CHECK_FALSE(env.id_at(3, 3).has_value());
  CHECK_FALSE(env.id_at(6, 0).has_value());
}

TEST_CASE("center node has 4 neighbors, the (5,0) tip exactly 1") {
  const SectionEnv env = build_section_env();
  const test::LatticeOracle oracle;
  CHECK(env.neighbors(30) == std::vector<int>{20, 29, 31, 40});
  // The tip's only in-lattice axis neighbor is (4,0); confirmed against the
  // brute-force scan.
  CHECK(oracle.neighbor_ids(35).size() == 1);
  CHECK(env.neighbors(35) == std::vector<int>{34});
}

TEST_CASE("node lookups reject unknown ids") {
  const SectionEnv env = build_section_env();
  CHECK_THROWS_AS(env.node(-1), std::invalid_argument);
  CHECK_THROWS_AS(env.node(61), std::invalid_argument);
  CHECK_THROWS_AS(env.neighbors(99), std::invalid_argument);
  const GlobalEnv genv = build_global_env();
  CHECK_THROWS_AS(genv.section(2), std::invalid_argument);
}

TEST_CASE("alternative_goals follows the (distance, id) order") {
  const SectionEnv env = build_section_env();

  SUBCASE("center: all 4 axis neighbors tie, lowest ids win") {
    CHECK(alternative_goals(env, 30, 3) == std::vector<int>{20, 29, 31});
  }

  SUBCASE("degenerate k") {
    CHECK(alternative_goals(env, 30, 0).empty());
  }

  SUBCASE("matches a brute-force scan from every goal") {
    for (int goal = 0; goal < env.size(); ++goal) {
      std::vector<std::pair<double, int>> ranked;
      for (const Node& n : env.nodes()) {
        if (n.id != goal) {
          ranked.emplace_back(euclidean(env, n.id, goal), n.id);
        }
      }
      std::stable_sort(ranked.begin(), ranked.end());
      const auto got = alternative_goals(env, goal, 3);
      REQUIRE(got.size() == 3);
      for (std::size_t k = 0; k < 3; ++k) {
        CHECK(got[k] == ranked[k].second);
      }
      CHECK(std::set<int>(got.begin(), got.end()).size() == 3);
      CHECK(std::find(got.begin(), got.end(), goal) == got.end());
    }
  }

  SUBCASE("boundary tip (5,0)") {
    CHECK(alternative_goals(env, 35, 3) == std::vector<int>{34, 24, 44});
  }

  SUBCASE("rejects bad arguments") {
    CHECK_THROWS_AS(alternative_goals(env, 61, 3), std::invalid_argument);
    CHECK_THROWS_AS(alternative_goals(env, 30, 61), std::invalid_argument);
  }
}

TEST_CASE("path validation") {
  const SectionEnv env = build_section_env();
  CHECK(is_valid_path(env, Path{kLowerSection, {30}}));
  CHECK(is_valid_path(env, Path{kUpperSection, {30, 31, 32}}));
  CHECK_FALSE(is_valid_path(env, Path{kLowerSection, {}}));
  CHECK_FALSE(is_valid_path(env, Path{kLowerSection, {30, 32}}));
  CHECK_FALSE(is_valid_path(env, Path{kLowerSection, {30, 99}}));
  CHECK_FALSE(is_valid_path(env, Path{7, {30, 31}}));
  CHECK_THROWS_WITH_AS(require_valid_path(env, Path{kLowerSection, {30, 32}}),
                       "path nodes 30 and 32 are not adjacent",
                       std::invalid_argument);
}

TEST_CASE("bfs_shortest_path is a shortest path with deterministic ties") {
  const SectionEnv env = build_section_env();
  const auto path = bfs_shortest_path(env, 50, 3);
  REQUIRE(path.front() == 50);
  REQUIRE(path.back() == 3);
  CHECK(static_cast<int>(path.size()) - 1 == graph_distance(env, 50, 3));
  CHECK(graph_distance(env, 50, 3) == 7);
  CHECK(is_valid_path(env, Path{kLowerSection, path}));
  CHECK(bfs_shortest_path(env, 50, 3) == path);
  CHECK(bfs_shortest_path(env, 30, 30) == std::vector<int>{30});
}
