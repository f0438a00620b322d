#pragma once

// Walk-circuit synthesis.
//
// Every synthesizer returns a Circuit on two n-qubit registers whose
// unitary equals the walk operator S (2 Pi - I) of its chain exactly
// (including sign) on the valid subspace |i, j>, i, j < N.
//
// Single-reference assembly, in time order:
//   T  ->  (I (x) K_b^dag)  ->  D  ->  (I (x) K_b)  ->  T^dag  ->  S
// where T = sum_i |i><i| (x) T_i maps every column state onto one reference
// state, K_b prepares that reference from basis state |b>, and D is the
// phase flip I - 2 I (x) |b><b| followed by GlobalPhase(-1).
//
// Partitioned assembly repeats the T / K_b / phase-flip segment once per
// subset of vertices, each conditioned on register 1 lying in that subset,
// and closes with a single GlobalPhase(-1) and the register swap.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "szegedy/circuit.hpp"
#include "szegedy/markov.hpp"

namespace szegedy {

// ---------------------------------------------------------------------------
// Modular shifts

enum class ShiftDirection : std::uint8_t {
  Left,   ///< |j> -> |j - amount mod 2^n>
  Right,  ///< |j> -> |j + amount mod 2^n>
};

/// Appends a modular shift of the register `reg` (most significant qubit
/// first). Shifting by 2^k is an increment/decrement of the top n-k qubits,
/// built from multi-controlled X gates.
void append_shift(Circuit& c, std::span<const int> reg, std::uint64_t amount,
                  ShiftDirection direction, std::span<const Control> controls = {});

/// Shift on qubits 0..n-1; the width grows to cover any control qubits.
Circuit shift_circuit(int n, std::uint64_t amount, ShiftDirection direction,
                      std::span<const Control> controls = {});

/// sum_i |i><i| (x) L^(i x) (or R^(i x)) on 2n qubits: for each bit k of
/// register 1, register 2 is shifted by x * 2^k under that bit.
Circuit controlled_shift_transform(int n, std::uint64_t offset_x,
                                   ShiftDirection direction = ShiftDirection::Left);

// ---------------------------------------------------------------------------
// Reference-state preparation

/// A circuit K on one register with K|basis> equal to a reference state.
struct Preparation {
  Circuit circuit;
  std::uint64_t basis = 0;
};

/// Probability-bisection preparation: X gates map |basis> to |0>, then each
/// qubit (most significant first) gets Ry rotations conditioned on the bits
/// above it. Levels whose split ratio is the same everywhere collapse to one
/// uncontrolled rotation. `target` must be nonnegative, unit norm and of
/// power-of-two length.
Preparation state_prep(std::span<const double> target, std::uint64_t basis = 0);

/// |N/2 - 1> -> (|1> + |N-1>)/sqrt 2 with a Hadamard and a CNOT cascade.
Preparation kb_cycle(int n);

/// |1> -> uniform over |1>..|N-1>. Level i rotates by
/// cos^2(t_i) = (2^(n-i) - 1) / (2^(n-i+1) - 1).
Preparation kb_complete(int n);

/// Prepends X gates so the preparation starts from `new_basis`.
Preparation rebased(const Preparation& prep, std::uint64_t new_basis);

// ---------------------------------------------------------------------------
// Single-reference walks

/// Parts of the diagonalizer U = (I (x) K_b^dag) T of a single-reference
/// walk on two n-qubit registers.
struct Diagonalizer {
  int n = 0;
  Circuit transform;  ///< width 2n
  Preparation prep;   ///< width n
};

Circuit synth_single_reference(const Diagonalizer& d);
Circuit synth_single_reference(int n, const Circuit& transform,
                               const Circuit& kb, std::uint64_t basis_b);

enum class CirculantGraph : std::uint8_t { Cycle, Complete };

/// Columns phi_i = R^(i x) phi_0 over N = 2^n states.
Diagonalizer circulant_diagonalizer(std::span<const double> phi0,
                                    std::uint64_t offset_x = 1);
Diagonalizer circulant_diagonalizer(CirculantGraph graph, int n);
Diagonalizer k2_diagonalizer();
/// The 1x1 chain [1] on zero qubits.
Diagonalizer trivial_diagonalizer();
Diagonalizer rebased(const Diagonalizer& d, std::uint64_t new_basis);
/// Diagonalizer of P1 (x) P2: U_1 on registers (i, phi_i), U_2 on
/// (j, phi_j), basis |b1, b2>.
Diagonalizer tensor_diagonalizer(const Diagonalizer& first,
                                 const Diagonalizer& second);

Circuit synth_circulant(std::span<const double> phi0, std::uint64_t offset_x = 1);
Circuit synth_circulant(CirculantGraph graph, int n);
Circuit synth_k2();
Circuit synth_tensor(const Diagonalizer& first, const Diagonalizer& second);
/// Crown graph K_N (x) K_2 with N = 2^n, basis |b1, b2> = |0, 1>.
Circuit synth_crown(int n);

// ---------------------------------------------------------------------------
// Partitioned walks

struct Partition {
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> references;  ///< r_x, a member of subset x
  std::vector<std::uint64_t> basis;     ///< b_x

  /// Throws InvalidInput unless the subsets partition 0..n_states-1 and
  /// every r_x / b_x is admissible for n-qubit registers.
  void validate(std::size_t n_states, int n_qubits) const;
};

/// Circuits for one subset: `transform` acts on 2n qubits and must already
/// be conditioned on register 1 (empty means identity); `prep` is K_{b_x}
/// on one register.
struct SubsetCircuits {
  Circuit transform;
  Circuit prep;
};

struct MemberTransform {
  std::size_t member = 0;
  Circuit circuit;  ///< T_{x,y} on one n-qubit register
};

/// Conditions each T_{x,y} on register 1 being exactly |y>.
Circuit transform_from_members(int n, std::span<const MemberTransform> members);

/// Control patterns over `qubits` (register 1) selecting exactly the
/// members among valid indices 0..n_states-1. Invalid indices are treated as
/// don't-care, so aligned blocks collapse to a single pattern.
std::vector<std::vector<Control>> subset_patterns(
    std::span<const std::size_t> members, std::size_t n_states,
    std::span<const int> qubits);

/// Checks T_{x,y}|phi_y> = |phi_{r_x}> and K_{b_x}|b_x> = |phi_{r_x}> to
/// 1e-10 (throwing SynthesisError naming the offending subset/member), then
/// assembles the partitioned circuit.
Circuit synth_partitioned(const TransitionMatrix& p, const Partition& z,
                          std::span<const SubsetCircuits> parts);

/// Groups vertices whose columns agree to `tolerance`; reference is the
/// first member, basis 0.
Partition partition_by_equal_columns(const TransitionMatrix& p,
                                     double tolerance = 1e-12);

/// Partitioned synthesis with identity transforms and state_prep
/// preparations. Correct for any chain; efficient only when few distinct
/// columns exist.
Circuit synth_equal_columns(const TransitionMatrix& p);

/// K_{2^n1, 2^n2}, n1 >= n2 >= 0, on registers of n1 + 1 qubits.
Circuit synth_bipartite(int n1, int n2);

/// Two cycles C_{2^n1}, C_{2^n2} joined by complete interconnections,
/// n1 >= n2 >= 2, on registers of n1 + 1 qubits.
Circuit synth_win_cycles(int n1, int n2);

/// Google matrix of the wheel W_N (N = 2^m outer vertices plus a hub) on
/// registers of m + 1 qubits.
Circuit synth_wheel(int m, bool directed, double alpha);

/// Google matrix of the 8-vertex directed example with three vertex classes.
Circuit synth_directed8(double alpha);

// ---------------------------------------------------------------------------
// Verification

inline constexpr double kDefaultVerifyTolerance = 1e-10;

struct VerifyReport {
  double max_deviation = 0.0;  ///< max entrywise |U_circuit - U_oracle| on valid columns
  double leakage = 0.0;        ///< max weight a valid column sends outside the valid subspace
  double tolerance = kDefaultVerifyTolerance;
  bool passed = false;

  std::string to_json() const;
};

/// Compares the circuit's columns for every valid |i, j> (each column is
/// apply(circuit, |i, j>), i.e. the matching column of unitary_of) against
/// the embedded dense oracle. Width must be 2 * ceil(log2 N).
VerifyReport verify(const Circuit& circuit, const TransitionMatrix& p,
                    double tolerance = kDefaultVerifyTolerance);

/// Register width used for an N-state chain.
inline int register_width(std::size_t n_states) { return ceil_log2(n_states); }

}  // namespace szegedy
