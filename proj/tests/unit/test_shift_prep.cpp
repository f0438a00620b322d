#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "szegedy/errors.hpp"
#include "szegedy/oracle.hpp"
#include "szegedy/simulator.hpp"
#include "szegedy/synth.hpp"
#include "test_support.hpp"

namespace szegedy {
namespace {

std::uint64_t image_of(const Circuit& c, std::uint64_t basis) {
  const StateVector s = apply(c, StateVector::basis(c.width(), basis));
  for (std::size_t k = 0; k < s.dimension(); ++k) {
    if (std::abs(s[k]) > 0.5) {
      EXPECT_EQ(s[k], Amplitude(1.0));
      return k;
    }
  }
  ADD_FAILURE() << "no image";
  return 0;
}

TEST(Shift, LeftDecrements) {
  const Circuit c = shift_circuit(3, 1, ShiftDirection::Left);
  EXPECT_EQ(image_of(c, 0), 7U);
  EXPECT_EQ(image_of(c, 5), 4U);
}

TEST(Shift, ZeroIsIdentity) {
  const Circuit c = shift_circuit(3, 0, ShiftDirection::Left);
  EXPECT_TRUE(c.empty());
}

TEST(Shift, AllAmountsBothDirections) {
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    for (std::uint64_t amount = 0; amount < 2 * dim; ++amount) {
      const Circuit right = shift_circuit(n, amount, ShiftDirection::Right);
      const Circuit left = shift_circuit(n, amount, ShiftDirection::Left);
      for (std::uint64_t j = 0; j < dim; ++j) {
        EXPECT_EQ(image_of(right, j), (j + amount) % dim);
        EXPECT_EQ(image_of(left, j), (j + 2 * dim - amount % dim) % dim);
      }
    }
  }
}

TEST(Shift, RespectsControls) {
  const std::vector<Control> ctrl = {on0(3)};
  const Circuit c = shift_circuit(3, 1, ShiftDirection::Right, ctrl);
  ASSERT_EQ(c.width(), 4);
  EXPECT_EQ(image_of(c, 0b0010), 0b0100U);  // register 2 -> 3 when qubit 3 is 0
  EXPECT_EQ(image_of(c, 0b0011), 0b0011U);
}

TEST(ControlledShift, SubtractsRegisterOneTimesOffset) {
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    for (std::uint64_t x = 0; x < 4; ++x) {
      const Circuit c = controlled_shift_transform(n, x);
      for (std::uint64_t i = 0; i < dim; ++i) {
        for (std::uint64_t j = 0; j < dim; ++j) {
          const std::uint64_t want = (j + dim * dim * 4 - i * x) % dim;
          EXPECT_EQ(image_of(c, (i << n) | j), (i << n) | want);
        }
      }
    }
  }
}

TEST(ControlledShift, ExampleThreeFive) {
  const Circuit c = controlled_shift_transform(3, 2);
  EXPECT_EQ(image_of(c, (3 << 3) | 5), (3U << 3) | 7U);
}

// ---------------------------------------------------------------------------

double prep_error(const Preparation& k, const std::vector<double>& target) {
  const StateVector s = apply(k.circuit, StateVector::basis(k.circuit.width(), k.basis));
  double worst = 0;
  for (std::size_t i = 0; i < target.size(); ++i) worst = std::max(worst, std::abs(s[i] - target[i]));
  return worst;
}

TEST(StatePrep, BasisTargetIsIdentityOnIt) {
  std::vector<double> t(8, 0.0);
  t[5] = 1.0;
  const Preparation k = state_prep(t, 5);
  EXPECT_LE(prep_error(k, t), 0.0);
  for (const Gate& g : k.circuit.gates()) EXPECT_EQ(g.kind, GateKind::PauliX);
}

TEST(StatePrep, UniformUsesTwoUncontrolledQuarterTurns) {
  const std::vector<double> t(4, 0.5);
  const Preparation k = state_prep(t, 0);
  ASSERT_EQ(k.circuit.size(), 2U);
  for (const Gate& g : k.circuit.gates()) {
    EXPECT_EQ(g.kind, GateKind::RyRotation);
    EXPECT_TRUE(g.controls.empty());
    EXPECT_NEAR(g.angle, std::numbers::pi / 4, 1e-15);
  }
  EXPECT_LE(prep_error(k, t), 1e-15);
}

TEST(StatePrep, WheelReferenceColumn) {
  const TransitionMatrix p = google_matrix(wheel_graph(8, false), 0.85);
  std::vector<double> t = column_state(p, 0);
  t.resize(16, 0.0);
  EXPECT_LE(prep_error(state_prep(t, 0), t), 1e-10);
  EXPECT_LE(prep_error(state_prep(t, 11), t), 1e-10);
}

TEST(StatePrep, RandomTargetsAndSparseOnes) {
  std::mt19937_64 rng(99);
  for (std::size_t len : {2U, 8U, 32U, 64U}) {
    for (int trial = 0; trial < 20; ++trial) {
      const std::vector<double> t = testing::random_unit_nonnegative(len, rng, trial % 2 ? 0.5 : 0.0);
      const std::uint64_t b = rng() % len;
      const Preparation k = state_prep(t, b);
      EXPECT_EQ(k.basis, b);
      EXPECT_LE(prep_error(k, t), 1e-10);
      const StateVector s = apply(k.circuit, StateVector::basis(k.circuit.width(), b));
      EXPECT_NEAR(s.squared_norm(), 1.0, 1e-12);
      double overlap = 0;
      for (std::size_t i = 0; i < len; ++i) overlap += s[i].real() * t[i];
      EXPECT_GE(overlap * overlap, 1 - 1e-12);
    }
  }
}

TEST(StatePrep, RejectsBadTargets) {
  EXPECT_THROW(state_prep(std::vector<double>{0.6, 0.6}), InvalidInput);
  EXPECT_THROW(state_prep(std::vector<double>{1.0, -0.0, 0.0}), InvalidInput);
  EXPECT_THROW(state_prep(std::vector<double>{-0.6, 0.8}), InvalidInput);
  EXPECT_THROW(state_prep(std::vector<double>{0.6, 0.8}, 2), InvalidInput);
}

TEST(KbCycle, PreparesCycleColumn) {
  for (int n = 2; n <= 6; ++n) {
    const std::size_t dim = std::size_t{1} << n;
    const Preparation k = kb_cycle(n);
    EXPECT_EQ(k.basis, dim / 2 - 1);
    std::vector<double> t = column_state(cycle_graph(dim), 0);
    EXPECT_LE(prep_error(k, t), 1e-15) << n;
    const StateVector back = apply(dagger(k.circuit), apply(k.circuit, StateVector::basis(n, k.basis)));
    EXPECT_NEAR(std::abs(back[k.basis]), 1.0, 1e-15);
  }
  EXPECT_THROW(kb_cycle(1), InvalidInput);
}

TEST(KbComplete, PreparesCompleteColumn) {
  for (int n = 1; n <= 6; ++n) {
    const std::size_t dim = std::size_t{1} << n;
    const Preparation k = kb_complete(n);
    EXPECT_EQ(k.basis, 1U);
    EXPECT_LE(prep_error(k, column_state(complete_graph(dim), 0)), 1e-10) << n;
    const Eigen::MatrixXcd u = unitary_of(compose(k.circuit, dagger(k.circuit)));
    EXPECT_LE((u - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(KbComplete, AnglesAreSquareRootedRatios) {
  const int n = 4;
  const Preparation k = kb_complete(n);
  int level = 1;
  for (const Gate& g : k.circuit.gates()) {
    if (g.kind != GateKind::RyRotation) continue;
    const double ratio = (std::ldexp(1.0, n - level) - 1) / (std::ldexp(1.0, n - level + 1) - 1);
    EXPECT_NEAR(std::cos(g.angle), std::sqrt(ratio), 1e-15) << level;
    ++level;
  }
  EXPECT_EQ(level, n);
}

TEST(KbComplete, LiteralCaptionAnglesMissTheTarget) {
  // Same cascade with cos(t_i) set to the bare ratio instead of its square
  // root: the prepared state is measurably wrong.
  const int n = 3;
  Circuit c = kb_complete(n).circuit;
  Circuit literal(n);
  int level = 1;
  for (Gate g : c.gates()) {
    if (g.kind == GateKind::RyRotation) {
      const double ratio = (std::ldexp(1.0, n - level) - 1) / (std::ldexp(1.0, n - level + 1) - 1);
      g.angle = std::acos(ratio);
      ++level;
    }
    literal.append(g);
  }
  EXPECT_GT(prep_error({literal, 1}, column_state(complete_graph(8), 0)), 1e-2);
}

TEST(Rebased, StartsFromNewBasis) {
  const Preparation k = rebased(kb_cycle(3), 6);
  EXPECT_EQ(k.basis, 6U);
  EXPECT_LE(prep_error(k, column_state(cycle_graph(8), 0)), 1e-15);
  EXPECT_THROW(rebased(kb_cycle(3), 8), InvalidInput);
}

}  // namespace
}  // namespace szegedy
