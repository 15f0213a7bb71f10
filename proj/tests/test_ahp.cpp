#include <doctest.h>

#include <array>
#include <numeric>

#include "oracles.hpp"
#include "tendonplan/ahp.hpp"

using namespace tendon;

namespace {

// Table rows: prioritized-criteria weight / remaining weight, groups 1..15.
struct GoldenRow {
  std::array<bool, 4> flags;
  double high;
  double low;
};

constexpr std::array<GoldenRow, 15> kGolden = {{
    {{true, false, false, false}, 0.75, 0.083},
    {{false, true, false, false}, 0.75, 0.083},
    {{false, false, true, false}, 0.75, 0.083},
    {{false, false, false, true}, 0.75, 0.083},
    {{true, true, false, false}, 0.45, 0.05},
    {{true, false, true, false}, 0.45, 0.05},
    {{true, false, false, true}, 0.45, 0.05},
    {{false, true, true, false}, 0.45, 0.05},
    {{false, true, false, true}, 0.45, 0.05},
    {{false, false, true, true}, 0.45, 0.05},
    {{true, true, true, false}, 0.321, 0.036},
    {{true, true, false, true}, 0.321, 0.036},
    {{true, false, true, true}, 0.321, 0.036},
    {{false, true, true, true}, 0.321, 0.036},
    {{true, true, true, true}, 0.25, 0.25},
}};

}  // namespace

TEST_CASE("matrix_from_priorities fills the Saaty ratios") {
  const PairwiseMatrix single = matrix_from_priorities({true, false, false, false});
  CHECK(single.n() == 4);
  for (int c = 1; c < 4; ++c) {
    CHECK(single.a(0, c) == 9.0);
    CHECK(single.a(c, 0) == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
  }
  for (int r = 1; r < 4; ++r) {
    for (int c = 1; c < 4; ++c) {
      CHECK(single.a(r, c) == 1.0);
    }
  }

  const PairwiseMatrix pair = matrix_from_priorities({true, true, false, false});
  CHECK(pair.a(0, 1) == 1.0);
  CHECK(pair.a(0, 2) == 9.0);
  CHECK(pair.a(2, 0) == doctest::Approx(1.0 / 9.0).epsilon(1e-12));

  const PairwiseMatrix none = matrix_from_priorities({false, false, false, false});
  CHECK(none.a.isOnes(0.0));
  CHECK_NOTHROW(validate(none));
}

TEST_CASE("validate rejects malformed matrices") {
  PairwiseMatrix bad_diag{Eigen::MatrixXd::Ones(4, 4)};
  bad_diag.a(2, 2) = 2.0;
  CHECK_THROWS_AS(validate(bad_diag), std::invalid_argument);

  PairwiseMatrix bad_reciprocal{Eigen::MatrixXd::Ones(3, 3)};
  bad_reciprocal.a(0, 1) = 4.0;
  bad_reciprocal.a(1, 0) = 0.5;
  CHECK_THROWS_AS(validate(bad_reciprocal), std::invalid_argument);

  PairwiseMatrix negative{Eigen::MatrixXd::Ones(3, 3)};
  negative.a(0, 1) = -1.0;
  negative.a(1, 0) = -1.0;
  CHECK_THROWS_AS(validate(negative), std::invalid_argument);

  PairwiseMatrix rect;
  rect.a = Eigen::MatrixXd::Ones(3, 4);
  CHECK_THROWS_AS(validate(rect), std::invalid_argument);
}

TEST_CASE("weights reproduce every table row within 0.001") {
  for (std::size_t g = 0; g < kGolden.size(); ++g) {
    const auto& row = kGolden[g];
    const CriteriaWeights w = weights(matrix_from_priorities(row.flags));
    CHECK(w.w.sum() == doctest::Approx(1.0).epsilon(1e-9));
    for (int c = 0; c < 4; ++c) {
      const double expected =
          row.flags[static_cast<std::size_t>(c)] ? row.high : row.low;
      CHECK(std::abs(w[c] - expected) <= 0.001);
    }
    const CriteriaWeights table = table_group_weights(static_cast<int>(g) + 1);
    CHECK((table.w - w.w).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(table.group_index == static_cast<int>(g) + 1);
  }
}

TEST_CASE("prioritized criteria strictly outweigh the rest") {
  for (int group = 1; group < 15; ++group) {
    const auto flags = group_priorities(group);
    const CriteriaWeights w = table_group_weights(group);
    for (int hi = 0; hi < 4; ++hi) {
      for (int lo = 0; lo < 4; ++lo) {
        if (flags[static_cast<std::size_t>(hi)] &&
            !flags[static_cast<std::size_t>(lo)]) {
          CHECK(w[hi] > w[lo]);
        }
      }
    }
  }
}

TEST_CASE("permuting the flags permutes the weights") {
  const std::array<bool, 4> flags = {true, false, true, false};
  const CriteriaWeights base = weights(matrix_from_priorities(flags));
  const std::array<int, 4> perm = {2, 0, 3, 1};
  std::array<bool, 4> permuted_flags{};
  for (int c = 0; c < 4; ++c) {
    permuted_flags[static_cast<std::size_t>(perm[static_cast<std::size_t>(c)])] =
        flags[static_cast<std::size_t>(c)];
  }
  const CriteriaWeights permuted = weights(matrix_from_priorities(permuted_flags));
  for (int c = 0; c < 4; ++c) {
    CHECK(permuted[perm[static_cast<std::size_t>(c)]] ==
          doctest::Approx(base[c]).epsilon(1e-12));
  }
}

TEST_CASE("consistency of priority matrices is exactly zero") {
  for (int group = 1; group <= 15; ++group) {
    const PairwiseMatrix m = matrix_from_priorities(group_priorities(group));
    const ConsistencyResult c = consistency(m);
    CHECK(c.lambda_max == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(std::abs(c.ci) <= 1e-9);
    REQUIRE(c.cr.has_value());
    CHECK(std::abs(*c.cr) <= 1e-9);
  }
}

TEST_CASE("consistency of a perturbed matrix matches the eigen solver") {
  PairwiseMatrix m{Eigen::MatrixXd::Ones(4, 4)};
  m.a(0, 1) = 3.0;
  m.a(1, 0) = 1.0 / 3.0;
  m.a(1, 2) = 3.0;
  m.a(2, 1) = 1.0 / 3.0;
  m.a(0, 2) = 3.0;
  m.a(2, 0) = 1.0 / 3.0;
  const ConsistencyResult c = consistency(m);
  CHECK(c.ci == doctest::Approx(test::eigen_ci(m.a)).epsilon(1e-9));
  CHECK(c.ci > 0.0);
  REQUIRE(c.cr.has_value());
  CHECK(*c.cr == doctest::Approx(c.ci / 0.90).epsilon(1e-12));
}

TEST_CASE("cr is flagged not-applicable below n = 3") {
  PairwiseMatrix m{Eigen::MatrixXd::Ones(2, 2)};
  m.a(0, 1) = 4.0;
  m.a(1, 0) = 0.25;
  const ConsistencyResult c = consistency(m);
  CHECK_FALSE(c.cr.has_value());
}

TEST_CASE("weights survive reciprocal transposition") {
  const PairwiseMatrix m = matrix_from_priorities({false, true, true, false});
  PairwiseMatrix flipped;
  flipped.a = m.a.transpose().cwiseInverse();
  const CriteriaWeights a = weights(m);
  const CriteriaWeights b = weights(flipped);
  CHECK((a.w - b.w).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("group bounds and the raw-equal switch") {
  CHECK_THROWS_AS(table_group_weights(0), std::invalid_argument);
  CHECK_THROWS_AS(table_group_weights(16), std::invalid_argument);
  CHECK_THROWS_AS(group_priorities(-3), std::invalid_argument);

  const CriteriaWeights raw = table_group_weights(15, true);
  CHECK((raw.w.array() == 1.0).all());
  const CriteriaWeights normalized = table_group_weights(15);
  CHECK((normalized.w.array() == 0.25).all());
}
