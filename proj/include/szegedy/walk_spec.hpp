#pragma once

// Declarative description of a walk: one value per supported chain class,
// from which both the transition matrix and the circuit are derived.
//
// JSON form (see README for the full schema):
//   {"type": "cycle", "params": {"n": 8}}
//   {"type": "custom", "matrix": [[...column 0...], [...column 1...], ...]}

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "szegedy/circuit.hpp"
#include "szegedy/markov.hpp"
#include "szegedy/synth.hpp"

namespace szegedy {

struct WalkSpec;

struct CycleSpec {
  std::size_t n_vertices = 8;
};
struct CompleteSpec {
  std::size_t n_vertices = 8;
};
/// Column j is `first_column` rotated down by j * offset.
struct CirculantSpec {
  std::vector<double> first_column;
  std::uint64_t offset = 1;
};
struct BipartiteSpec {
  std::size_t n1 = 4;
  std::size_t n2 = 4;
};
struct K2Spec {};
/// Crown graph on 2 * n vertices.
struct CrownSpec {
  std::size_t n = 4;
};
struct WinSpec {
  std::size_t n1 = 8;
  std::size_t n2 = 4;
};
/// Google matrix of a wheel with `n_outer` rim vertices and one hub.
struct WheelSpec {
  std::size_t n_outer = 8;
  bool directed = false;
  double alpha = 0.85;
};
struct Directed8Spec {
  double alpha = 0.85;
};
struct TensorSpec {
  std::shared_ptr<const WalkSpec> first;
  std::shared_ptr<const WalkSpec> second;
};
/// Arbitrary chain, synthesized by grouping identical columns.
struct CustomSpec {
  Eigen::MatrixXd matrix;
};

struct WalkSpec {
  std::variant<CycleSpec, CompleteSpec, CirculantSpec, BipartiteSpec, K2Spec,
               CrownSpec, WinSpec, WheelSpec, Directed8Spec, TensorSpec, CustomSpec>
      value;
};

WalkSpec make_tensor(WalkSpec first, WalkSpec second);

/// Short human-readable label, e.g. "cycle(8)" or "wheel_directed(8, 0.85)".
std::string describe(const WalkSpec& spec);

TransitionMatrix transition_matrix(const WalkSpec& spec);

/// Throws InvalidInput (or SynthesisError) if the class parameters are
/// outside what the synthesizer supports.
Circuit synthesize(const WalkSpec& spec);

/// Single-reference classes only (cycle, complete, circulant, k2, crown,
/// tensor); throws SynthesisError otherwise.
Diagonalizer diagonalizer(const WalkSpec& spec);

WalkSpec parse_walk_spec(const std::string& json_text);
WalkSpec load_walk_spec(const std::filesystem::path& path);
std::string to_json(const WalkSpec& spec);

}  // namespace szegedy
