#pragma once

// Gate-level IR for walk circuits.
//
// A walk circuit on 2n qubits holds two registers: register 1 is qubits
// 0..n-1 and register 2 is qubits n..2n-1. Within a register the lowest
// qubit index is the most significant bit, so basis state |i, j> is the
// integer i * 2^n + j. Gates are listed in time order.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace szegedy {

enum class Polarity : std::uint8_t {
  One,   ///< fires when the control qubit is |1>
  Zero,  ///< fires when the control qubit is |0>
};

struct Control {
  int qubit = 0;
  Polarity polarity = Polarity::One;

  bool operator==(const Control&) const = default;
};

inline Control on1(int qubit) { return {qubit, Polarity::One}; }
inline Control on0(int qubit) { return {qubit, Polarity::Zero}; }

enum class GateKind : std::uint8_t {
  PauliX,
  Hadamard,
  /// [[cos t, -sin t], [sin t, cos t]] (no half-angle).
  RyRotation,
  /// -1 phase on |1> of the target.
  PhaseFlip,
  /// -1 phase on |0> of the target, i.e. X Z X.
  PrimedPhaseFlip,
  Swap,
  /// Scalar +1 or -1; never carries controls.
  GlobalPhase,
};

struct Gate {
  GateKind kind = GateKind::PauliX;
  int target = -1;  ///< unused for GlobalPhase
  int other = -1;   ///< second operand of Swap
  double angle = 0.0;
  int sign = 1;     ///< GlobalPhase only
  std::vector<Control> controls;

  static Gate x(int target, std::vector<Control> controls = {});
  static Gate h(int target, std::vector<Control> controls = {});
  static Gate ry(int target, double angle, std::vector<Control> controls = {});
  static Gate phase_flip(int target, std::vector<Control> controls = {});
  static Gate primed_phase_flip(int target, std::vector<Control> controls = {});
  static Gate swap(int a, int b, std::vector<Control> controls = {});
  static Gate global_phase(int sign);

  /// Qubits the gate acts on (not counting controls).
  std::vector<int> operands() const;
  Gate inverse() const;

  bool operator==(const Gate&) const = default;
};

class Circuit {
 public:
  explicit Circuit(int width = 0);

  int width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Throws InvalidInput if the gate breaks a Gate or width invariant.
  Circuit& append(Gate gate);
  /// Appends every gate of `other`, which must have the same width.
  Circuit& append(const Circuit& other);

  bool operator==(const Circuit&) const = default;

 private:
  int width_ = 0;
  std::vector<Gate> gates_;
};

/// Gates of `a` followed by gates of `b`; unitary is U_b * U_a.
Circuit compose(const Circuit& a, const Circuit& b);

Circuit dagger(const Circuit& c);

/// Adds `controls` to every gate. A GlobalPhase(-1) turns into a phase flip
/// on the control pattern; GlobalPhase(+1) is dropped.
Circuit with_controls(const Circuit& c, std::span<const Control> controls);

/// Moves qubit q of `c` to `qubit_map[q]` in a circuit of width `width`.
Circuit relabel(const Circuit& c, std::span<const int> qubit_map, int width);

struct GateCount {
  std::size_t total = 0;
  /// One- and two-qubit gate estimate: a gate with k >= 2 controls costs
  /// 2(k-1)+1, anything else costs 1.
  std::size_t decomposed_estimate = 0;

  bool operator==(const GateCount&) const = default;
};

GateCount gate_count(const Circuit& c);

/// Controls selecting basis `value` on `qubits` (most significant first).
std::vector<Control> basis_pattern(std::uint64_t value, std::span<const int> qubits);

/// Consecutive qubit indices first, first+1, ..., first+count-1.
std::vector<int> qubit_range(int first, int count);

}  // namespace szegedy
