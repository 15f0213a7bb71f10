#pragma once

#include <Eigen/Core>
#include <array>
#include <optional>
#include <string>

namespace tendon {

/// Index order of the four resilience criteria, everywhere in this library.
enum Criterion : int {
  kDistance = 0,
  kMotorDamage = 1,
  kMechanicalDamage = 2,
  kAccuracy = 3,
};
inline constexpr int kCriteriaCount = 4;

extern const std::array<std::string, kCriteriaCount> kCriterionNames;

/// Saaty scale value mapped to "prioritized over non-prioritized".
inline constexpr double kPriorityRatio = 9.0;

/// Positive reciprocal pairwise-comparison matrix (unit diagonal,
/// a(j,i) == 1/a(i,j)).
struct PairwiseMatrix {
  Eigen::MatrixXd a;

  int n() const { return static_cast<int>(a.rows()); }
};

/// Throws std::invalid_argument when the matrix is not square, not positive,
/// or breaks reciprocity beyond 1e-12.
void validate(const PairwiseMatrix& m);

/// Per-criterion weights in Criterion order.
struct CriteriaWeights {
  Eigen::Vector4d w{0.25, 0.25, 0.25, 0.25};
  std::optional<int> group_index;

  double operator[](int criterion) const { return w[criterion]; }
};

struct ConsistencyResult {
  double lambda_max = 0.0;
  double ci = 0.0;
  /// Absent when n < 3 (the consistency ratio is undefined there).
  std::optional<double> cr;
};

/// Builds the comparison matrix for a set of prioritized criteria: ratio
/// `scale` where a prioritized criterion meets a non-prioritized one,
/// 1 otherwise.
PairwiseMatrix matrix_from_priorities(const std::array<bool, kCriteriaCount>& prioritized,
                                      double scale = kPriorityRatio);

/// Principal-eigenvector weights by power iteration (residual 1e-12).
/// Throws std::runtime_error on non-convergence.
CriteriaWeights weights(const PairwiseMatrix& m);

/// CI = (lambda_max - n) / (n - 1); CR = CI / RI(n) with Saaty's random
/// indexes, RI(4) = 0.90.
ConsistencyResult consistency(const PairwiseMatrix& m);

/// Priority flags of one criteria-combination group (1..15): groups 1-4
/// prioritize one criterion, 5-10 a pair, 11-14 a triple, 15 all four.
std::array<bool, kCriteriaCount> group_priorities(int group_index);

/// Weights for a criteria-combination group. With `raw_equal`, group 15
/// returns the unnormalized unit vector (1,1,1,1) instead of 0.25 each.
CriteriaWeights table_group_weights(int group_index, bool raw_equal = false);

inline constexpr int kGroupCount = 15;

}  // namespace tendon
