#pragma once

// Transition matrices for the Markov chains the walk synthesizers support.
//
// Convention (fixed project-wide): entry (i, j) is the probability of the
// transition j -> i, so every column sums to one (left-stochastic).

#include <cstddef>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace szegedy {

/// Result of checking a dense matrix against the left-stochastic invariants.
struct ValidationReport {
  double max_column_deviation = 0.0;  ///< max_j |sum_i M(i,j) - 1|
  double min_entry = 0.0;
  std::size_t negative_entries = 0;
  std::size_t zero_columns = 0;
  bool passed = false;

  std::string summary() const;
};

inline constexpr double kStochasticTolerance = 1e-12;

ValidationReport validate(const Eigen::MatrixXd& matrix,
                          double tolerance = kStochasticTolerance);

class TransitionMatrix {
 public:
  /// Validates `entries`; throws InvalidInput carrying the report summary on
  /// failure. Zero columns are rejected (they have no square-root column
  /// state).
  static TransitionMatrix from_dense(Eigen::MatrixXd entries);

  std::size_t size() const { return static_cast<std::size_t>(entries_.rows()); }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  const Eigen::MatrixXd& dense() const { return entries_; }
  Eigen::VectorXd column(std::size_t j) const {
    return entries_.col(static_cast<Eigen::Index>(j));
  }

  bool operator==(const TransitionMatrix& other) const {
    return entries_ == other.entries_;
  }

 private:
  explicit TransitionMatrix(Eigen::MatrixXd entries)
      : entries_(std::move(entries)) {}

  Eigen::MatrixXd entries_;
};

/// 0/1 matrix; C(i, j) = 1 iff there is a link j -> i.
class ConnectivityMatrix {
 public:
  static ConnectivityMatrix from_dense(Eigen::MatrixXd entries);

  std::size_t size() const { return static_cast<std::size_t>(entries_.rows()); }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  const Eigen::MatrixXd& dense() const { return entries_; }

 private:
  explicit ConnectivityMatrix(Eigen::MatrixXd entries)
      : entries_(std::move(entries)) {}

  Eigen::MatrixXd entries_;
};

/// P(i,j) = A(i,j) / indeg(j). Every column of `adjacency` must be nonzero.
TransitionMatrix column_normalized(const Eigen::MatrixXd& adjacency);

Eigen::MatrixXd cycle_adjacency(std::size_t n_vertices);

TransitionMatrix cycle_graph(std::size_t n_vertices);
TransitionMatrix complete_graph(std::size_t n_vertices);
TransitionMatrix complete_bipartite(std::size_t n1, std::size_t n2);
TransitionMatrix crown_graph(std::size_t n);
TransitionMatrix win_cycles(std::size_t n1, std::size_t n2);

/// Column i is the first column rotated down by i * offset (mod N).
TransitionMatrix circulant(const Eigen::VectorXd& first_column,
                           std::size_t offset = 1);

ConnectivityMatrix wheel_graph(std::size_t n_outer, bool directed);
ConnectivityMatrix directed_example8();

/// Dangling columns of `c` are patched to 1/N, then damped toward J/N.
TransitionMatrix google_matrix(const ConnectivityMatrix& c, double alpha);

TransitionMatrix tensor(const TransitionMatrix& p1, const TransitionMatrix& p2);

bool is_power_of_two(std::size_t value);
/// Smallest n with 2^n >= value (0 for value <= 1).
int ceil_log2(std::size_t value);

}  // namespace szegedy
