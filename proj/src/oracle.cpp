#include "szegedy/oracle.hpp"

#include <cmath>
#include <string>

#include "szegedy/errors.hpp"

namespace szegedy {

namespace {

using Index = Eigen::Index;

void require_oracle_size(std::size_t n) {
  if (n > kMaxOracleStates) {
    throw InvalidInput("dense oracle limited to " +
                       std::to_string(kMaxOracleStates) + " states, got " +
                       std::to_string(n));
  }
}

Eigen::MatrixXd column_states(const TransitionMatrix& p) {
  return p.dense().cwiseSqrt();
}

}  // namespace

std::vector<double> column_state(const TransitionMatrix& p, std::size_t i) {
  if (i >= p.size()) {
    throw InvalidInput("column index " + std::to_string(i) + " out of range");
  }
  std::vector<double> phi(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) phi[j] = std::sqrt(p(j, i));
  return phi;
}

Eigen::MatrixXd projector(const TransitionMatrix& p) {
  const std::size_t n = p.size();
  require_oracle_size(n);
  const Index big = static_cast<Index>(n * n);
  const Eigen::MatrixXd phi = column_states(p);
  Eigen::MatrixXd pi = Eigen::MatrixXd::Zero(big, big);
  // Block (i, i) of Pi is |phi_i><phi_i|; off-diagonal blocks vanish.
  for (Index i = 0; i < static_cast<Index>(n); ++i) {
    const Index off = i * static_cast<Index>(n);
    pi.block(off, off, static_cast<Index>(n), static_cast<Index>(n)) =
        phi.col(i) * phi.col(i).transpose();
  }
  return pi;
}

Eigen::MatrixXd reflection(const TransitionMatrix& p) {
  Eigen::MatrixXd r = 2.0 * projector(p);
  r.diagonal().array() -= 1.0;
  return r;
}

Eigen::MatrixXd swap_operator(std::size_t n_states) {
  require_oracle_size(n_states);
  const Index n = static_cast<Index>(n_states);
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n * n, n * n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) s(j * n + i, i * n + j) = 1.0;
  }
  return s;
}

WalkOracle walk_operator(const TransitionMatrix& p) {
  WalkOracle oracle;
  oracle.n_states = p.size();
  // S is a permutation, so apply it as a row shuffle instead of a product.
  const Eigen::MatrixXd r = reflection(p);
  const Index n = static_cast<Index>(p.size());
  oracle.matrix.resize(r.rows(), r.cols());
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) oracle.matrix.row(j * n + i) = r.row(i * n + j);
  }
  return oracle;
}

Eigen::MatrixXd embed(const WalkOracle& oracle, int n_qubits_per_register) {
  const std::size_t reg = std::size_t{1} << n_qubits_per_register;
  if (reg < oracle.n_states) {
    throw InvalidInput("register of " + std::to_string(n_qubits_per_register) +
                       " qubits cannot hold " + std::to_string(oracle.n_states) +
                       " states");
  }
  const std::size_t n = oracle.n_states;
  const Index dim = static_cast<Index>(reg * reg);
  Eigen::MatrixXd out = Eigen::MatrixXd::Identity(dim, dim);
  for (std::size_t r = 0; r < n * n; ++r) {
    const Index er = static_cast<Index>(embedded_index(r / n, r % n, n_qubits_per_register));
    out(er, er) = 0.0;
  }
  for (std::size_t r = 0; r < n * n; ++r) {
    const Index er = static_cast<Index>(embedded_index(r / n, r % n, n_qubits_per_register));
    for (std::size_t c = 0; c < n * n; ++c) {
      const Index ec = static_cast<Index>(embedded_index(c / n, c % n, n_qubits_per_register));
      out(er, ec) = oracle.matrix(static_cast<Index>(r), static_cast<Index>(c));
    }
  }
  return out;
}

Eigen::VectorXd initial_superposition(const TransitionMatrix& p) {
  const std::size_t n = p.size();
  Eigen::VectorXd psi = Eigen::VectorXd::Zero(static_cast<Index>(n * n));
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      psi(static_cast<Index>(i * n + j)) = scale * std::sqrt(p(j, i));
    }
  }
  return psi;
}

StateVector initial_superposition(const TransitionMatrix& p,
                                  int n_qubits_per_register) {
  const std::size_t n = p.size();
  if ((std::size_t{1} << n_qubits_per_register) < n) {
    throw InvalidInput("register too small for initial superposition");
  }
  StateVector s(2 * n_qubits_per_register);
  s[0] = 0.0;
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      s[embedded_index(i, j, n_qubits_per_register)] = scale * std::sqrt(p(j, i));
    }
  }
  return s;
}

}  // namespace szegedy
