#pragma once

// Dense ground-truth construction of the single-step walk operator
// U = S (2 Pi - I), built straight from the transition matrix. Basis state
// |i, j> of the N^2-dimensional space has index i * N + j.

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "szegedy/markov.hpp"
#include "szegedy/simulator.hpp"

namespace szegedy {

/// Largest chain the dense oracle will build (matrix dimension 4096).
inline constexpr std::size_t kMaxOracleStates = 64;

struct WalkOracle {
  std::size_t n_states = 0;
  Eigen::MatrixXd matrix;  ///< N^2 x N^2

  std::size_t valid_dim() const { return n_states * n_states; }
};

/// |phi_i>: entry j is sqrt(P(j, i)).
std::vector<double> column_state(const TransitionMatrix& p, std::size_t i);

/// Pi = sum_i |psi_i><psi_i| with |psi_i> = |i> (x) |phi_i>.
Eigen::MatrixXd projector(const TransitionMatrix& p);
/// 2 Pi - I.
Eigen::MatrixXd reflection(const TransitionMatrix& p);
/// Register swap permutation on N^2 states.
Eigen::MatrixXd swap_operator(std::size_t n_states);

WalkOracle walk_operator(const TransitionMatrix& p);

/// Places the oracle on 2^(2n) states: the oracle block acts on |i, j> with
/// i, j < N and every other basis state is left fixed.
Eigen::MatrixXd embed(const WalkOracle& oracle, int n_qubits_per_register);

/// (1/sqrt N) sum_i |i> (x) |phi_i> as an N^2 vector.
Eigen::VectorXd initial_superposition(const TransitionMatrix& p);
/// Same state placed in two n-qubit registers.
StateVector initial_superposition(const TransitionMatrix& p,
                                  int n_qubits_per_register);

/// Index of the valid basis state |i, j> inside two n-qubit registers.
inline std::size_t embedded_index(std::size_t i, std::size_t j, int n) {
  return (i << n) + j;
}

}  // namespace szegedy
