#include "szegedy/pagerank.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "szegedy/errors.hpp"
#include "szegedy/number_format.hpp"
#include "szegedy/simulator.hpp"
#include "szegedy/synth.hpp"

namespace szegedy {

namespace {

using Index = Eigen::Index;

constexpr const char* kSeriesHeader = "# szegedy-pagerank-series v1";
constexpr const char* kSummaryHeader = "# szegedy-pagerank-summary v1";

void require_steps(std::size_t steps) {
  if (steps < 1) throw InvalidInput("pagerank needs at least one time step");
}

void finish(PagerankSeries& s) { s.average = s.instantaneous.colwise().mean().transpose(); }

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

void check_written(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

template <class T>
T parse_number(std::string_view text, std::size_t line) {
  T value{};
  const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
  if (result.ec != std::errc() || result.ptr != text.data() + text.size()) {
    throw InvalidInput("line " + std::to_string(line) + ": bad number '" +
                       std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::vector<std::size_t> PagerankSeries::ranking() const {
  std::vector<std::size_t> order(n_vertices);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
    return average(static_cast<Index>(a)) > average(static_cast<Index>(b));
  });
  return order;
}

PagerankSeries run_pagerank(const Circuit& walk, const TransitionMatrix& p,
                            std::size_t steps) {
  require_steps(steps);
  const std::size_t n_states = p.size();
  const int n = register_width(n_states);
  if (walk.width() != 2 * n) {
    throw InvalidInput("pagerank: circuit width " + std::to_string(walk.width()) +
                       " does not match a " + std::to_string(n_states) + "-state chain");
  }
  const std::size_t reg = std::size_t{1} << n;

  PagerankSeries series{n_states, steps, Eigen::MatrixXd(steps, n_states), {}};
  StateVector state = initial_superposition(p, n);
  for (std::size_t t = 0; t < steps; ++t) {
    double valid = 0.0;
    for (std::size_t j = 0; j < n_states; ++j) {
      double q = 0.0;
      for (std::size_t i = 0; i < n_states; ++i) q += std::norm(state[embedded_index(i, j, n)]);
      series.instantaneous(static_cast<Index>(t), static_cast<Index>(j)) = q;
      valid += q;
    }
    double outside = 0.0;
    for (std::size_t k = 0; k < reg * reg; ++k) {
      if ((k >> n) >= n_states || (k & (reg - 1)) >= n_states) outside += std::norm(state[k]);
    }
    if (outside > kPagerankLeakageLimit) {
      throw LeakageError("pagerank: probability " + format_double(outside) +
                         " outside the valid subspace at step " + std::to_string(t));
    }
    if (t + 1 < steps) {
      apply_in_place(walk, state);
      apply_in_place(walk, state);
    }
  }
  finish(series);
  return series;
}

PagerankSeries run_pagerank(const WalkOracle& walk, const TransitionMatrix& p,
                            std::size_t steps) {
  require_steps(steps);
  const std::size_t n_states = p.size();
  if (walk.n_states != n_states) {
    throw InvalidInput("pagerank: oracle has " + std::to_string(walk.n_states) +
                       " states but the chain has " + std::to_string(n_states));
  }
  const Eigen::MatrixXd two_steps = walk.matrix * walk.matrix;
  Eigen::VectorXd psi = initial_superposition(p);
  const Index dim = static_cast<Index>(n_states);

  PagerankSeries series{n_states, steps, Eigen::MatrixXd(steps, n_states), {}};
  for (std::size_t t = 0; t < steps; ++t) {
    const Eigen::Map<const Eigen::MatrixXd> grid(psi.data(), dim, dim);  // grid(j, i)
    series.instantaneous.row(static_cast<Index>(t)) =
        grid.array().square().rowwise().sum().transpose();
    if (t + 1 < steps) psi = two_steps * psi;
  }
  finish(series);
  return series;
}

HubComparison compare_hub(const PagerankSeries& undirected, const PagerankSeries& directed,
                          std::size_t hub) {
  if (undirected.n_vertices != directed.n_vertices) {
    throw InvalidInput("compare_hub: series have different vertex counts");
  }
  if (hub >= undirected.n_vertices) throw InvalidInput("compare_hub: hub out of range");
  HubComparison c;
  c.undirected_hub = undirected.average(static_cast<Index>(hub));
  c.directed_hub = directed.average(static_cast<Index>(hub));
  c.difference = c.directed_hub - c.undirected_hub;
  c.directed_higher = c.difference > 0.0;
  return c;
}

HubComparison compare_hub(const PagerankSeries& undirected, const PagerankSeries& directed) {
  if (undirected.n_vertices == 0) throw InvalidInput("compare_hub: empty series");
  return compare_hub(undirected, directed, undirected.n_vertices - 1);
}

void write_series_csv(const PagerankSeries& s, const std::filesystem::path& path) {
  std::ofstream out = open_output(path);
  out << kSeriesHeader << " n_vertices=" << s.n_vertices << " steps=" << s.steps << '\n';
  out << "t,vertex,Q\n";
  for (std::size_t t = 0; t < s.steps; ++t) {
    for (std::size_t j = 0; j < s.n_vertices; ++j) {
      out << t << ',' << j << ','
          << format_double(s.instantaneous(static_cast<Index>(t), static_cast<Index>(j)))
          << '\n';
    }
  }
  check_written(out, path);
}

void write_summary_csv(const PagerankSeries& s, const std::filesystem::path& path) {
  std::ofstream out = open_output(path);
  out << kSummaryHeader << " n_vertices=" << s.n_vertices << " steps=" << s.steps << '\n';
  out << "vertex,avg_Q\n";
  for (std::size_t j = 0; j < s.n_vertices; ++j) {
    out << j << ',' << format_double(s.average(static_cast<Index>(j))) << '\n';
  }
  check_written(out, path);
}

void write_summary_json(const PagerankSeries& s, const std::filesystem::path& path) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (std::size_t v = 0; v < s.n_vertices; ++v) {
    j[std::to_string(v)] = s.average(static_cast<Index>(v));
  }
  std::ofstream out = open_output(path);
  out << j.dump(2) << '\n';
  check_written(out, path);
}

void write_plot_script(const PagerankSeries& s, const std::filesystem::path& series_csv,
                       const std::filesystem::path& summary_csv,
                       const std::filesystem::path& path) {
  std::ofstream out = open_output(path);
  out << "# szegedy-pagerank-plot v1 (gnuplot)\n"
      << "set datafile separator ','\n"
      << "set datafile commentschars '#'\n"
      << "set key outside right\n"
      << "set multiplot layout 2,1\n"
      << "set xlabel 't'\nset ylabel 'Q(j,t)'\n"
      << "plot for [v=0:" << (s.n_vertices == 0 ? 0 : s.n_vertices - 1) << "] '"
      << series_csv.string()
      << "' every ::1 using 1:($2==v ? $3 : 1/0) with lines title sprintf('%d', v)\n"
      << "set xlabel 'vertex'\nset ylabel '<Q(j)>'\n"
      << "set style fill solid 0.6\nset boxwidth 0.8\n"
      << "plot '" << summary_csv.string() << "' every ::1 using 1:2 with boxes notitle\n"
      << "unset multiplot\n";
  check_written(out, path);
}

PagerankSeries read_series_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  struct Row {
    std::size_t t, vertex;
    double q;
  };
  std::vector<Row> rows;
  std::string line;
  std::size_t line_no = 0;
  bool seen_header = false;
  bool seen_columns = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.rfind(kSeriesHeader, 0) == 0) seen_header = true;
      continue;
    }
    if (!seen_columns) {
      if (line != "t,vertex,Q") {
        throw InvalidInput("line " + std::to_string(line_no) + ": expected 't,vertex,Q'");
      }
      seen_columns = true;
      continue;
    }
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string::npos) {
      throw InvalidInput("line " + std::to_string(line_no) + ": expected three fields");
    }
    const std::string_view view(line);
    rows.push_back({parse_number<std::size_t>(view.substr(0, c1), line_no),
                    parse_number<std::size_t>(view.substr(c1 + 1, c2 - c1 - 1), line_no),
                    parse_number<double>(view.substr(c2 + 1), line_no)});
  }
  if (!seen_header) throw InvalidInput(path.string() + " is not a pagerank series file");

  PagerankSeries s;
  for (const Row& r : rows) {
    s.steps = std::max(s.steps, r.t + 1);
    s.n_vertices = std::max(s.n_vertices, r.vertex + 1);
  }
  if (rows.size() != s.steps * s.n_vertices) {
    throw InvalidInput(path.string() + ": series is incomplete");
  }
  s.instantaneous = Eigen::MatrixXd::Constant(static_cast<Index>(s.steps),
                                              static_cast<Index>(s.n_vertices), -1.0);
  for (const Row& r : rows) {
    double& cell = s.instantaneous(static_cast<Index>(r.t), static_cast<Index>(r.vertex));
    if (cell != -1.0) throw InvalidInput(path.string() + ": duplicate row");
    cell = r.q;
  }
  finish(s);
  return s;
}

}  // namespace szegedy
