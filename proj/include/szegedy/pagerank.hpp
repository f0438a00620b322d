#pragma once

// Quantum PageRank: evolve the walk's initial superposition by two walk
// steps per time step and record the second-register marginal
//   Q(j, t) = sum_i |<i, j| U^(2t) |psi_0>|^2,  t = 0..T-1,
// together with its time average.

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "szegedy/circuit.hpp"
#include "szegedy/markov.hpp"
#include "szegedy/oracle.hpp"

namespace szegedy {

inline constexpr std::size_t kDefaultPagerankSteps = 1000;
/// Probability allowed outside the valid subspace before a run aborts.
inline constexpr double kPagerankLeakageLimit = 1e-8;

struct PagerankSeries {
  std::size_t n_vertices = 0;
  std::size_t steps = 0;
  Eigen::MatrixXd instantaneous;  ///< steps x n_vertices, row t is Q(., t)
  Eigen::VectorXd average;        ///< column means of `instantaneous`

  /// Vertices by decreasing average (ties keep index order).
  std::vector<std::size_t> ranking() const;
};

/// Circuit backend. The circuit must be the walk on 2 * ceil(log2 N) qubits.
/// Throws LeakageError if the state leaves the valid subspace.
PagerankSeries run_pagerank(const Circuit& walk, const TransitionMatrix& p,
                            std::size_t steps = kDefaultPagerankSteps);
/// Dense-oracle backend.
PagerankSeries run_pagerank(const WalkOracle& walk, const TransitionMatrix& p,
                            std::size_t steps = kDefaultPagerankSteps);

struct HubComparison {
  double undirected_hub = 0.0;
  double directed_hub = 0.0;
  double difference = 0.0;  ///< directed - undirected
  bool directed_higher = false;
};

/// Compares the average of vertex `hub` across two runs of equal size.
HubComparison compare_hub(const PagerankSeries& undirected,
                          const PagerankSeries& directed, std::size_t hub);
/// Hub taken as the last vertex.
HubComparison compare_hub(const PagerankSeries& undirected,
                          const PagerankSeries& directed);

// File formats (each text format opens with a "# <name> v1" line):
//   series   t,vertex,Q
//   summary  vertex,avg_Q
//   json     {"<vertex>": avg, ...}
void write_series_csv(const PagerankSeries& s, const std::filesystem::path& path);
void write_summary_csv(const PagerankSeries& s, const std::filesystem::path& path);
void write_summary_json(const PagerankSeries& s, const std::filesystem::path& path);
/// gnuplot script drawing Q(j, t) per vertex from `series_csv`, plus the
/// averages as a bar chart from `summary_csv`.
void write_plot_script(const PagerankSeries& s, const std::filesystem::path& series_csv,
                       const std::filesystem::path& summary_csv,
                       const std::filesystem::path& path);

PagerankSeries read_series_csv(const std::filesystem::path& path);

}  // namespace szegedy
