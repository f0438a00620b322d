#include "szegedy/markov.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "szegedy/errors.hpp"

namespace szegedy {

namespace {

using Index = Eigen::Index;

Index as_index(std::size_t value) { return static_cast<Index>(value); }

void require_power_of_two(std::size_t value, std::size_t minimum,
                          const char* what) {
  if (value < minimum || !is_power_of_two(value)) {
    std::ostringstream msg;
    msg << what << " must be a power of two >= " << minimum << ", got "
        << value;
    throw InvalidInput(msg.str());
  }
}

}  // namespace

std::string ValidationReport::summary() const {
  std::ostringstream out;
  out << (passed ? "pass" : "fail")
      << ": max column deviation " << max_column_deviation << ", min entry "
      << min_entry << ", negative entries " << negative_entries
      << ", zero columns " << zero_columns;
  return out.str();
}

ValidationReport validate(const Eigen::MatrixXd& matrix, double tolerance) {
  ValidationReport report;
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
    report.max_column_deviation = std::numeric_limits<double>::infinity();
    return report;
  }
  report.min_entry = matrix.minCoeff();
  for (Index j = 0; j < matrix.cols(); ++j) {
    double sum = 0.0;
    bool all_zero = true;
    for (Index i = 0; i < matrix.rows(); ++i) {
      const double value = matrix(i, j);
      if (!std::isfinite(value)) {
        report.max_column_deviation = std::numeric_limits<double>::infinity();
      }
      if (value < 0.0) ++report.negative_entries;
      if (value != 0.0) all_zero = false;
      sum += value;
    }
    if (all_zero) ++report.zero_columns;
    report.max_column_deviation =
        std::max(report.max_column_deviation, std::abs(sum - 1.0));
  }
  report.passed = report.negative_entries == 0 && report.zero_columns == 0 &&
                  report.max_column_deviation <= tolerance;
  return report;
}

TransitionMatrix TransitionMatrix::from_dense(Eigen::MatrixXd entries) {
  const ValidationReport report = validate(entries);
  if (!report.passed) {
    throw InvalidInput("not a column-stochastic matrix (" + report.summary() +
                       ")");
  }
  return TransitionMatrix(std::move(entries));
}

ConnectivityMatrix ConnectivityMatrix::from_dense(Eigen::MatrixXd entries) {
  if (entries.rows() != entries.cols() || entries.rows() == 0) {
    throw InvalidInput("connectivity matrix must be square and non-empty");
  }
  for (Index j = 0; j < entries.cols(); ++j) {
    for (Index i = 0; i < entries.rows(); ++i) {
      if (entries(i, j) != 0.0 && entries(i, j) != 1.0) {
        throw InvalidInput("connectivity matrix entries must be 0 or 1");
      }
    }
  }
  return ConnectivityMatrix(std::move(entries));
}

bool is_power_of_two(std::size_t value) {
  return value != 0 && (value & (value - 1)) == 0;
}

int ceil_log2(std::size_t value) {
  int n = 0;
  while ((std::size_t{1} << n) < value) ++n;
  return n;
}

TransitionMatrix column_normalized(const Eigen::MatrixXd& adjacency) {
  Eigen::MatrixXd p = adjacency;
  for (Index j = 0; j < p.cols(); ++j) {
    const double indeg = p.col(j).sum();
    if (indeg <= 0.0) {
      throw InvalidInput("column " + std::to_string(j) +
                         " has no incoming weight");
    }
    p.col(j) /= indeg;
  }
  return TransitionMatrix::from_dense(std::move(p));
}

Eigen::MatrixXd cycle_adjacency(std::size_t n_vertices) {
  if (n_vertices < 3) {
    throw InvalidInput("cycle graph needs at least 3 vertices, got " +
                       std::to_string(n_vertices));
  }
  const Index n = as_index(n_vertices);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Index j = 0; j < n; ++j) {
    a((j + 1) % n, j) = 1.0;
    a((j + n - 1) % n, j) = 1.0;
  }
  return a;
}

TransitionMatrix cycle_graph(std::size_t n_vertices) {
  return column_normalized(cycle_adjacency(n_vertices));
}

TransitionMatrix complete_graph(std::size_t n_vertices) {
  if (n_vertices < 2) {
    throw InvalidInput("complete graph needs at least 2 vertices");
  }
  const Index n = as_index(n_vertices);
  Eigen::MatrixXd a = Eigen::MatrixXd::Ones(n, n);
  a.diagonal().setZero();
  return column_normalized(a);
}

TransitionMatrix complete_bipartite(std::size_t n1, std::size_t n2) {
  if (n1 < 1 || n2 < 1) {
    throw InvalidInput("complete bipartite graph needs n1, n2 >= 1");
  }
  const Index a = as_index(n1);
  const Index b = as_index(n2);
  Eigen::MatrixXd adjacency = Eigen::MatrixXd::Zero(a + b, a + b);
  adjacency.topRightCorner(a, b).setOnes();
  adjacency.bottomLeftCorner(b, a).setOnes();
  return column_normalized(adjacency);
}

TransitionMatrix crown_graph(std::size_t n) {
  require_power_of_two(n, 4, "crown graph parameter");
  const Index k = as_index(n);
  Eigen::MatrixXd kn = Eigen::MatrixXd::Ones(k, k);
  kn.diagonal().setZero();
  Eigen::MatrixXd adjacency = Eigen::MatrixXd::Zero(2 * k, 2 * k);
  // A(K_n) (x) A(K_2): vertex (u, s) -> index 2u + s.
  for (Index u = 0; u < k; ++u) {
    for (Index v = 0; v < k; ++v) {
      if (kn(u, v) == 0.0) continue;
      adjacency(2 * u, 2 * v + 1) = 1.0;
      adjacency(2 * u + 1, 2 * v) = 1.0;
    }
  }
  return column_normalized(adjacency);
}

TransitionMatrix win_cycles(std::size_t n1, std::size_t n2) {
  // Each block is a cycle, so both sizes need at least 4 vertices to be a
  // power of two with a simple cycle.
  require_power_of_two(n1, 4, "WIN first cycle size");
  require_power_of_two(n2, 4, "WIN second cycle size");
  if (n1 < n2) throw InvalidInput("WIN requires n1 >= n2");
  const Index a = as_index(n1);
  const Index b = as_index(n2);
  const double left = 1.0 / static_cast<double>(2 + n2);
  const double right = 1.0 / static_cast<double>(2 + n1);
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(a + b, a + b);
  p.topLeftCorner(a, a) = cycle_adjacency(n1) * left;
  p.bottomLeftCorner(b, a).setConstant(left);
  p.topRightCorner(a, b).setConstant(right);
  p.bottomRightCorner(b, b) = cycle_adjacency(n2) * right;
  return TransitionMatrix::from_dense(std::move(p));
}

TransitionMatrix circulant(const Eigen::VectorXd& first_column,
                           std::size_t offset) {
  const Index n = first_column.size();
  if (n == 0) throw InvalidInput("circulant needs a non-empty column");
  Eigen::MatrixXd p(n, n);
  for (Index j = 0; j < n; ++j) {
    const Index shift = static_cast<Index>((static_cast<std::size_t>(j) * offset) %
                                           static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
      p((i + shift) % n, j) = first_column(i);
    }
  }
  return TransitionMatrix::from_dense(std::move(p));
}

ConnectivityMatrix wheel_graph(std::size_t n_outer, bool directed) {
  require_power_of_two(n_outer, 4, "wheel outer cycle size");
  const Index n = as_index(n_outer);
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n + 1, n + 1);
  c.topLeftCorner(n, n) = cycle_adjacency(n_outer);
  c.row(n).head(n).setOnes();
  if (!directed) c.col(n).head(n).setOnes();
  return ConnectivityMatrix::from_dense(std::move(c));
}

ConnectivityMatrix directed_example8() {
  Eigen::MatrixXd c(8, 8);
  c << 0, 0, 0, 1, 1, 0, 0, 0,  //
      1, 0, 0, 0, 1, 0, 0, 0,   //
      0, 1, 0, 0, 0, 1, 0, 0,   //
      0, 0, 1, 0, 0, 1, 0, 0,   //
      0, 0, 0, 0, 0, 0, 1, 1,   //
      0, 0, 0, 0, 0, 0, 1, 1,   //
      0, 0, 0, 0, 0, 0, 1, 1,   //
      0, 0, 0, 0, 0, 0, 1, 1;
  return ConnectivityMatrix::from_dense(std::move(c));
}

TransitionMatrix google_matrix(const ConnectivityMatrix& c, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw InvalidInput("damping parameter must lie in [0, 1]");
  }
  const Index n = as_index(c.size());
  const double uniform = 1.0 / static_cast<double>(n);
  Eigen::MatrixXd g(n, n);
  for (Index j = 0; j < n; ++j) {
    const double outdeg = c.dense().col(j).sum();
    for (Index i = 0; i < n; ++i) {
      const double patched = outdeg == 0.0 ? uniform : c.dense()(i, j) / outdeg;
      g(i, j) = alpha * patched + (1.0 - alpha) * uniform;
    }
  }
  return TransitionMatrix::from_dense(std::move(g));
}

TransitionMatrix tensor(const TransitionMatrix& p1, const TransitionMatrix& p2) {
  const Index n1 = as_index(p1.size());
  const Index n2 = as_index(p2.size());
  Eigen::MatrixXd k(n1 * n2, n1 * n2);
  for (Index i1 = 0; i1 < n1; ++i1) {
    for (Index j1 = 0; j1 < n1; ++j1) {
      k.block(i1 * n2, j1 * n2, n2, n2) = p1.dense()(i1, j1) * p2.dense();
    }
  }
  return TransitionMatrix::from_dense(std::move(k));
}

}  // namespace szegedy
