#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "szegedy/errors.hpp"
#include "szegedy/walk_spec.hpp"

namespace szegedy {
namespace {

void expect_verified(const WalkSpec& spec) {
  const VerifyReport r = verify(synthesize(spec), transition_matrix(spec));
  EXPECT_TRUE(r.passed) << describe(spec) << " " << r.to_json();
}

TEST(WalkSpec, EveryClassSynthesizes) {
  expect_verified({CycleSpec{8}});
  expect_verified({CompleteSpec{4}});
  expect_verified({CirculantSpec{{0.1, 0.2, 0.3, 0.4}, 3}});
  expect_verified({BipartiteSpec{4, 2}});
  expect_verified({K2Spec{}});
  expect_verified({CrownSpec{4}});
  expect_verified({WinSpec{4, 4}});
  expect_verified({WheelSpec{4, true, 0.85}});
  expect_verified({Directed8Spec{0.85}});
  expect_verified(make_tensor({CycleSpec{4}}, {K2Spec{}}));
  expect_verified(make_tensor(make_tensor({K2Spec{}}, {K2Spec{}}), {CompleteSpec{2}}));
  Eigen::MatrixXd m(3, 3);
  m << 0.2, 0.2, 0.5, 0.3, 0.3, 0.5, 0.5, 0.5, 0.0;
  expect_verified({CustomSpec{m}});
}

TEST(WalkSpec, RejectsUnsupportedSizes) {
  EXPECT_THROW(synthesize({CycleSpec{6}}), InvalidInput);
  EXPECT_THROW(synthesize({BipartiteSpec{2, 4}}), InvalidInput);
  EXPECT_THROW(synthesize({WinSpec{8, 2}}), InvalidInput);
  EXPECT_THROW(diagonalizer({WheelSpec{}}), SynthesisError);
  EXPECT_THROW(synthesize(make_tensor({WheelSpec{}}, {K2Spec{}})), SynthesisError);
}

TEST(WalkSpec, ParsesJson) {
  const WalkSpec w = parse_walk_spec(R"({"type": "wheel_directed", "params": {"n": 4, "alpha": 0.5}})");
  const auto* wheel = std::get_if<WheelSpec>(&w.value);
  ASSERT_NE(wheel, nullptr);
  EXPECT_EQ(wheel->n_outer, 4U);
  EXPECT_TRUE(wheel->directed);
  EXPECT_EQ(wheel->alpha, 0.5);
  EXPECT_EQ(describe(w), "wheel_directed(4, 0.5)");
}

TEST(WalkSpec, CustomMatrixIsListOfColumns) {
  const WalkSpec w = parse_walk_spec(R"({"type": "custom", "matrix": [[0, 1], [0.25, 0.75]]})");
  const TransitionMatrix p = transition_matrix(w);
  EXPECT_EQ(p(1, 0), 1.0);
  EXPECT_EQ(p(0, 1), 0.25);
}

TEST(WalkSpec, JsonRoundTrip) {
  const std::vector<WalkSpec> specs = {
      {CycleSpec{16}},
      {CirculantSpec{{0.5, 0.5}, 1}},
      {BipartiteSpec{8, 4}},
      {Directed8Spec{0.7}},
      make_tensor({CrownSpec{4}}, {CycleSpec{4}}),
      {CustomSpec{Eigen::MatrixXd::Constant(2, 2, 0.5)}},
  };
  for (const WalkSpec& s : specs) {
    const WalkSpec back = parse_walk_spec(to_json(s));
    EXPECT_EQ(to_json(back), to_json(s));
    EXPECT_EQ(transition_matrix(back).dense(), transition_matrix(s).dense());
  }
}

TEST(WalkSpec, MalformedJson) {
  EXPECT_THROW(parse_walk_spec("{"), InvalidInput);
  EXPECT_THROW(parse_walk_spec(R"({"params": {}})"), InvalidInput);
  EXPECT_THROW(parse_walk_spec(R"({"type": "hypercube"})"), InvalidInput);
  EXPECT_THROW(parse_walk_spec(R"({"type": "cycle", "params": {"n": -3}})"), InvalidInput);
  EXPECT_THROW(parse_walk_spec(R"({"type": "custom", "matrix": [[1, 0]]})"), InvalidInput);
  EXPECT_THROW(transition_matrix(parse_walk_spec(R"({"type": "custom", "matrix": [[0.5, 0.4], [0, 1]]})")),
               InvalidInput);
}

TEST(WalkSpec, LoadFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "szegedy_spec_test.json";
  {
    std::ofstream out(path);
    out << R"({"type": "win", "params": {"n1": 8, "n2": 4}})";
  }
  const WalkSpec w = load_walk_spec(path);
  EXPECT_EQ(describe(w), "win(8, 4)");
  std::filesystem::remove(path);
  EXPECT_THROW(load_walk_spec(path), IoError);
}

}  // namespace
}  // namespace szegedy
