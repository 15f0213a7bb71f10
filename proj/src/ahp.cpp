#include "tendonplan/ahp.hpp"

#include <cmath>
#include <stdexcept>

namespace tendon {

const std::array<std::string, kCriteriaCount> kCriterionNames = {
    "distance", "motors_damage", "mechanical_damage", "accuracy"};

void validate(const PairwiseMatrix& m) {
  if (m.a.rows() != m.a.cols() || m.a.rows() == 0) {
    throw std::invalid_argument("pairwise matrix must be square and non-empty");
  }
  for (int r = 0; r < m.n(); ++r) {
    if (std::abs(m.a(r, r) - 1.0) > 1e-12) {
      throw std::invalid_argument("pairwise matrix diagonal must be 1");
    }
    for (int c = 0; c < m.n(); ++c) {
      if (!(m.a(r, c) > 0.0)) {
        throw std::invalid_argument("pairwise matrix entries must be positive");
      }
      if (std::abs(m.a(c, r) - 1.0 / m.a(r, c)) > 1e-12) {
        throw std::invalid_argument("pairwise matrix breaks reciprocity");
      }
    }
  }
}

PairwiseMatrix matrix_from_priorities(const std::array<bool, kCriteriaCount>& prioritized,
                                      double scale) {
  if (!(scale > 0.0)) {
    throw std::invalid_argument("priority scale must be positive");
  }
  PairwiseMatrix m;
  m.a = Eigen::MatrixXd::Ones(kCriteriaCount, kCriteriaCount);
  for (int r = 0; r < kCriteriaCount; ++r) {
    for (int c = 0; c < kCriteriaCount; ++c) {
      if (prioritized[static_cast<std::size_t>(r)] &&
          !prioritized[static_cast<std::size_t>(c)]) {
        m.a(r, c) = scale;
        m.a(c, r) = 1.0 / scale;
      }
    }
  }
  return m;
}

namespace {

// Power iteration; returns the normalized principal eigenvector.
Eigen::VectorXd principal_eigenvector(const Eigen::MatrixXd& a) {
  constexpr int kMaxIterations = 10000;
  constexpr double kResidual = 1e-12;
  const int n = static_cast<int>(a.rows());
  Eigen::VectorXd v = Eigen::VectorXd::Constant(n, 1.0 / n);
  for (int it = 0; it < kMaxIterations; ++it) {
    Eigen::VectorXd next = a * v;
    next /= next.sum();
    const double delta = (next - v).cwiseAbs().maxCoeff();
    v = next;
    if (delta < kResidual) return v;
  }
  throw std::runtime_error("power iteration did not converge");
}

}  // namespace

CriteriaWeights weights(const PairwiseMatrix& m) {
  validate(m);
  if (m.n() != kCriteriaCount) {
    throw std::invalid_argument("expected a 4x4 criteria matrix");
  }
  CriteriaWeights out;
  out.w = principal_eigenvector(m.a);
  return out;
}

ConsistencyResult consistency(const PairwiseMatrix& m) {
  validate(m);
  const int n = m.n();
  const Eigen::VectorXd v = principal_eigenvector(m.a);
  const Eigen::VectorXd av = m.a * v;
  ConsistencyResult res;
  res.lambda_max = (av.array() / v.array()).mean();
  res.ci = n > 1 ? (res.lambda_max - n) / (n - 1) : 0.0;
  // Saaty random indexes for n = 1..10.
  static constexpr double kRandomIndex[] = {0.0,  0.0,  0.58, 0.90, 1.12,
                                            1.24, 1.32, 1.41, 1.45, 1.49};
  if (n >= 3) {
    if (n > 10) {
      throw std::invalid_argument("no random index tabulated for n > 10");
    }
    res.cr = res.ci / kRandomIndex[n - 1];
  }
  return res;
}

std::array<bool, kCriteriaCount> group_priorities(int group_index) {
  // Rows of the criteria-combination table: singles, pairs, triples, all.
  static constexpr std::array<std::array<bool, 4>, kGroupCount> kFlags = {{
      {true, false, false, false},   // 1
      {false, true, false, false},   // 2
      {false, false, true, false},   // 3
      {false, false, false, true},   // 4
      {true, true, false, false},    // 5
      {true, false, true, false},    // 6
      {true, false, false, true},    // 7
      {false, true, true, false},    // 8
      {false, true, false, true},    // 9
      {false, false, true, true},    // 10
      {true, true, true, false},     // 11
      {true, true, false, true},     // 12
      {true, false, true, true},     // 13
      {false, true, true, true},     // 14
      {true, true, true, true},      // 15
  }};
  if (group_index < 1 || group_index > kGroupCount) {
    throw std::invalid_argument("group index must be in 1.." +
                                std::to_string(kGroupCount) + ", got " +
                                std::to_string(group_index));
  }
  return kFlags[static_cast<std::size_t>(group_index - 1)];
}

CriteriaWeights table_group_weights(int group_index, bool raw_equal) {
  CriteriaWeights out;
  if (group_index == kGroupCount && raw_equal) {
    out.w = Eigen::Vector4d::Ones();
  } else {
    out = weights(matrix_from_priorities(group_priorities(group_index)));
  }
  out.group_index = group_index;
  return out;
}

}  // namespace tendon
