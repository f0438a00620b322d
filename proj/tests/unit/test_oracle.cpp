#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "szegedy/errors.hpp"
#include "szegedy/markov.hpp"
#include "szegedy/oracle.hpp"
#include "test_support.hpp"

namespace szegedy {
namespace {

using Eigen::MatrixXd;

std::vector<TransitionMatrix> sample_chains() {
  std::mt19937_64 rng(2);
  return {cycle_graph(4),
          cycle_graph(5),
          complete_graph(2),
          complete_graph(8),
          complete_bipartite(4, 2),
          crown_graph(4),
          win_cycles(4, 4),
          google_matrix(wheel_graph(8, false), 0.85),
          google_matrix(wheel_graph(8, true), 0.85),
          google_matrix(directed_example8(), 0.85),
          TransitionMatrix::from_dense(testing::random_stochastic(6, rng))};
}

TEST(ColumnState, CycleEight) {
  const std::vector<double> phi = column_state(cycle_graph(8), 0);
  const double r = 1 / std::sqrt(2.0);
  const std::vector<double> want = {0, r, 0, 0, 0, 0, 0, r};
  for (std::size_t k = 0; k < 8; ++k) EXPECT_NEAR(phi[k], want[k], 1e-15);
}

TEST(ColumnState, K2AndRange) {
  EXPECT_EQ(column_state(complete_graph(2), 0), (std::vector<double>{0, 1}));
  EXPECT_THROW(column_state(complete_graph(2), 2), InvalidInput);
}

TEST(ColumnState, WheelPattern) {
  const double beta = 0.15 / 9;
  const double gamma = 0.85 / 3 + beta;
  const std::vector<double> phi = column_state(google_matrix(wheel_graph(8, false), 0.85), 0);
  double norm = 0;
  for (std::size_t k = 0; k < 9; ++k) {
    const bool peak = k == 1 || k == 7 || k == 8;
    EXPECT_NEAR(phi[k], std::sqrt(peak ? gamma : beta), 1e-15);
    norm += phi[k] * phi[k];
  }
  EXPECT_NEAR(norm, 1.0, 1e-12);
}

TEST(WalkOperator, K2Matrix) {
  MatrixXd want(4, 4);
  want << -1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, -1;
  EXPECT_EQ(walk_operator(complete_graph(2)).matrix, want);
}

TEST(WalkOperator, MatchesKroneckerConstruction) {
  for (const TransitionMatrix& p : sample_chains()) {
    const WalkOracle w = walk_operator(p);
    EXPECT_EQ(w.valid_dim(), p.size() * p.size());
    EXPECT_LE((w.matrix - testing::reference_walk(p.dense())).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(WalkOperator, UnitaryAndReflections) {
  for (const TransitionMatrix& p : sample_chains()) {
    const auto n = static_cast<Eigen::Index>(p.size());
    const MatrixXd id = MatrixXd::Identity(n * n, n * n);
    const MatrixXd u = walk_operator(p).matrix;
    const MatrixXd r = reflection(p);
    const MatrixXd s = swap_operator(p.size());
    EXPECT_LE((u.transpose() * u - id).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LE((r * r - id).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_EQ(s * s, id);
    EXPECT_LE((s * r - u).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(WalkOperator, SizeGuard) {
  EXPECT_THROW(walk_operator(cycle_graph(kMaxOracleStates + 1)), InvalidInput);
}

TEST(Embed, PowerOfTwoUnchanged) {
  const WalkOracle w = walk_operator(cycle_graph(4));
  EXPECT_EQ(embed(w, 2), w.matrix);
}

TEST(Embed, PadsWithIdentity) {
  const WalkOracle w = walk_operator(cycle_graph(3));
  const MatrixXd e = embed(w, 2);
  ASSERT_EQ(e.rows(), 16);
  for (int j = 0; j < 4; ++j) {
    const Eigen::Index a = (3 << 2) + j;
    const Eigen::Index b = (j << 2) + 3;
    EXPECT_EQ(e.col(a), MatrixXd::Identity(16, 16).col(a));
    EXPECT_EQ(e.col(b), MatrixXd::Identity(16, 16).col(b));
  }
  EXPECT_LE((e.transpose() * e - MatrixXd::Identity(16, 16)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_THROW(embed(w, 1), InvalidInput);
}

TEST(InitialState, K2) {
  const Eigen::VectorXd psi = initial_superposition(complete_graph(2));
  const double r = 1 / std::sqrt(2.0);
  EXPECT_NEAR(psi(1), r, 1e-15);
  EXPECT_NEAR(psi(2), r, 1e-15);
  EXPECT_EQ(psi(0), 0.0);
  EXPECT_EQ(psi(3), 0.0);
}

TEST(InitialState, UnitNormAndC4Amplitude) {
  for (const TransitionMatrix& p : sample_chains()) {
    EXPECT_NEAR(initial_superposition(p).squaredNorm(), 1.0, 1e-12);
  }
  const Eigen::VectorXd psi = initial_superposition(cycle_graph(4));
  EXPECT_NEAR(psi(1), 0.5 / std::sqrt(2.0), 1e-15);
}

TEST(InitialState, EmbeddedMatchesFlat) {
  const TransitionMatrix p = google_matrix(wheel_graph(4, false), 0.85);
  const Eigen::VectorXd flat = initial_superposition(p);
  const StateVector s = initial_superposition(p, 3);
  double total = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      EXPECT_EQ(s[embedded_index(i, j, 3)].real(), flat(static_cast<Eigen::Index>(i * 5 + j)));
      total += std::norm(s[embedded_index(i, j, 3)]);
    }
  }
  EXPECT_NEAR(total, s.squared_norm(), 0.0);
}

}  // namespace
}  // namespace szegedy
