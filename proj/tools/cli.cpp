#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "szegedy/circuit_io.hpp"
#include "szegedy/errors.hpp"
#include "szegedy/number_format.hpp"
#include "szegedy/oracle.hpp"
#include "szegedy/pagerank.hpp"
#include "szegedy/simulator.hpp"
#include "szegedy/synth.hpp"
#include "szegedy/walk_spec.hpp"

namespace szegedy::cli {

namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string graph;
  std::optional<std::size_t> n;
  std::optional<std::size_t> n1;
  std::optional<std::size_t> n2;
  std::optional<int> m;
  bool directed = false;
  double alpha = 0.85;
  std::uint64_t offset_x = 1;
  std::size_t steps = 0;  // 0: command default
  double tol = kDefaultVerifyTolerance;
  std::string out;
  std::uint64_t seed = 1;
  std::string spec_path;
  std::string circuit_path;
  // command specific
  std::string format = "text";
  std::string backend = "circuit";
  std::string initial = "superposition";
  std::uint64_t basis = 0;
  int from = 3;
  int to = 10;
};

const std::vector<std::string> kGraphNames = {
    "cycle", "complete", "bipartite", "crown",     "wheel", "wheel_directed",
    "win",   "k2",       "directed8", "circulant", "custom"};

void add_graph_options(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--graph", cfg.graph, "Graph class")
      ->check(CLI::IsMember(kGraphNames));
  cmd.add_option("--n", cfg.n, "Vertex count (cycle/complete/crown/wheel rim)");
  cmd.add_option("--n1", cfg.n1, "First block size (bipartite, win)");
  cmd.add_option("--n2", cfg.n2, "Second block size (bipartite, win)");
  cmd.add_option("--m", cfg.m, "Wheel rim exponent: 2^m outer vertices");
  cmd.add_flag("--directed", cfg.directed, "Directed wheel (hub has no out-links)");
  cmd.add_option("--alpha", cfg.alpha, "Google damping parameter")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd.add_option("--offset-x", cfg.offset_x, "Circulant offset x (cycle/complete)")
      ->capture_default_str();
  cmd.add_option("--spec", cfg.spec_path, "JSON walk spec (overrides --graph)");
}

std::size_t require(const std::optional<std::size_t>& v, std::size_t fallback) {
  return v.value_or(fallback);
}

WalkSpec spec_from_config(const RunConfig& cfg) {
  if (!cfg.spec_path.empty()) return load_walk_spec(cfg.spec_path);
  if (cfg.graph.empty()) throw InvalidInput("either --graph or --spec is required");
  const std::string& g = cfg.graph;
  if (g == "cycle" || g == "complete") {
    const std::size_t n = require(cfg.n, 8);
    if (cfg.offset_x != 1) {
      const TransitionMatrix base = g == "cycle" ? cycle_graph(n) : complete_graph(n);
      const Eigen::VectorXd col = base.column(0);
      return {CirculantSpec{std::vector<double>(col.data(), col.data() + col.size()),
                            cfg.offset_x}};
    }
    if (g == "cycle") return {CycleSpec{n}};
    return {CompleteSpec{n}};
  }
  if (g == "bipartite") return {BipartiteSpec{require(cfg.n1, 4), require(cfg.n2, 4)}};
  if (g == "crown") return {CrownSpec{require(cfg.n, 4)}};
  if (g == "win") return {WinSpec{require(cfg.n1, 8), require(cfg.n2, 4)}};
  if (g == "k2") return {K2Spec{}};
  if (g == "directed8") return {Directed8Spec{cfg.alpha}};
  if (g == "wheel" || g == "wheel_directed") {
    std::size_t rim = require(cfg.n, 8);
    if (cfg.m) {
      if (*cfg.m < 2 || *cfg.m > 20) throw InvalidInput("--m must lie in [2, 20]");
      rim = std::size_t{1} << *cfg.m;
    }
    return {WheelSpec{rim, cfg.directed || g == "wheel_directed", cfg.alpha}};
  }
  throw InvalidInput("--graph " + g + " needs --spec with a matrix or column");
}

std::ofstream open_file(const fs::path& path) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot write " + path.string());
  return f;
}

// Writes to --out when given, otherwise to `out`.
template <class Writer>
void emit(const RunConfig& cfg, std::ostream& out, Writer&& write) {
  if (cfg.out.empty()) {
    write(out);
    return;
  }
  std::ofstream f = open_file(cfg.out);
  write(f);
  f.flush();
  if (!f) throw IoError("write failed for " + cfg.out);
}

Circuit load_circuit(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read circuit " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_circuit(text.str());
}

int cmd_synth(const RunConfig& cfg, std::ostream& out) {
  const Circuit c = synthesize(spec_from_config(cfg));
  if (cfg.format != "text" && cfg.format != "qasm") {
    throw InvalidInput("--format must be text or qasm");
  }
  emit(cfg, out, [&](std::ostream& o) {
    if (cfg.format == "qasm") o << to_qasm(c);
    else write_text(c, o);
  });
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (!(cfg.tol > 0.0)) throw InvalidInput("--tol must be positive");
  const WalkSpec spec = spec_from_config(cfg);
  const TransitionMatrix p = transition_matrix(spec);
  const Circuit c = cfg.circuit_path.empty() ? synthesize(spec) : load_circuit(cfg.circuit_path);
  const VerifyReport report = verify(c, p, cfg.tol);
  emit(cfg, out, [&](std::ostream& o) { o << report.to_json() << '\n'; });
  return report.passed ? kOk : kVerificationFailed;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  const WalkSpec spec = spec_from_config(cfg);
  const TransitionMatrix p = transition_matrix(spec);
  const Circuit c = cfg.circuit_path.empty() ? synthesize(spec) : load_circuit(cfg.circuit_path);
  const int n = register_width(p.size());
  if (c.width() != 2 * n) throw InvalidInput("circuit width does not match the chain");

  StateVector state(2 * n);
  if (cfg.initial == "superposition") {
    state = initial_superposition(p, n);
  } else if (cfg.initial == "basis") {
    state = StateVector::basis(2 * n, cfg.basis);
  } else if (cfg.initial == "random") {
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> gauss;
    std::vector<Amplitude> amps(state.dimension());
    double norm = 0.0;
    for (Amplitude& a : amps) {
      a = {gauss(rng), gauss(rng)};
      norm += std::norm(a);
    }
    for (Amplitude& a : amps) a /= std::sqrt(norm);
    state = StateVector::from_amplitudes(2 * n, std::move(amps));
  } else {
    throw InvalidInput("--initial must be superposition, basis or random");
  }
  const std::size_t steps = cfg.steps == 0 ? 1 : cfg.steps;
  for (std::size_t t = 0; t < steps; ++t) apply_in_place(c, state);
  emit(cfg, out, [&](std::ostream& o) { write_csv(state, o); });
  return kOk;
}

int cmd_pagerank(const RunConfig& cfg, std::ostream& out) {
  const WalkSpec spec = spec_from_config(cfg);
  const TransitionMatrix p = transition_matrix(spec);
  const std::size_t steps = cfg.steps == 0 ? kDefaultPagerankSteps : cfg.steps;
  PagerankSeries series;
  if (cfg.backend == "circuit") {
    series = run_pagerank(synthesize(spec), p, steps);
  } else if (cfg.backend == "oracle") {
    series = run_pagerank(walk_operator(p), p, steps);
  } else {
    throw InvalidInput("--backend must be circuit or oracle");
  }
  const fs::path dir = cfg.out.empty() ? fs::path(".") : fs::path(cfg.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  const fs::path series_csv = dir / "pagerank_series.csv";
  const fs::path summary_csv = dir / "pagerank_summary.csv";
  write_series_csv(series, series_csv);
  write_summary_csv(series, summary_csv);
  write_summary_json(series, dir / "pagerank_summary.json");
  write_plot_script(series, "pagerank_series.csv", "pagerank_summary.csv",
                    dir / "pagerank_plot.gp");

  out << "# " << describe(spec) << ", T=" << steps << ", backend=" << cfg.backend << '\n';
  out << "rank,vertex,avg_Q\n";
  const std::vector<std::size_t> order = series.ranking();
  for (std::size_t r = 0; r < order.size(); ++r) {
    out << r + 1 << ',' << order[r] << ','
        << format_double(series.average(static_cast<Eigen::Index>(order[r]))) << '\n';
  }
  return kOk;
}

// One row per (class, size): register width n, gate totals and the ratio to
// n^3.
int cmd_gatecount(const RunConfig& cfg, std::ostream& out) {
  if (cfg.from < 1 || cfg.to < cfg.from || cfg.to > 20) {
    throw InvalidInput("gatecount needs 1 <= --from <= --to <= 20");
  }
  std::vector<std::string> classes = {"cycle", "complete", "crown", "bipartite", "win",
                                      "wheel"};
  if (!cfg.graph.empty()) classes = {cfg.graph};
  emit(cfg, out, [&](std::ostream& o) {
    o << "# szegedy-gatecount v1\n";
    o << "class,k,vertices,register_qubits,gates,decomposed,gates_per_n3\n";
    for (const std::string& cls : classes) {
      for (int k = cfg.from; k <= cfg.to; ++k) {
        const std::size_t size = std::size_t{1} << k;
        WalkSpec spec;
        if (cls == "cycle") spec = {CycleSpec{size}};
        else if (cls == "complete") spec = {CompleteSpec{size}};
        else if (cls == "crown") spec = {CrownSpec{size}};
        else if (cls == "bipartite") spec = {BipartiteSpec{size, size}};
        else if (cls == "win") spec = {WinSpec{size, size / 2}};
        else if (cls == "wheel") spec = {WheelSpec{size, cfg.directed, cfg.alpha}};
        else throw InvalidInput("gatecount does not scale class " + cls);
        Circuit c(0);
        try {
          c = synthesize(spec);
        } catch (const InvalidInput&) {
          continue;  // size below the class minimum
        }
        const GateCount gc = gate_count(c);
        const int n = c.width() / 2;
        const double ratio = static_cast<double>(gc.total) / std::pow(n, 3);
        o << cls << ',' << k << ',' << transition_matrix(spec).size() << ',' << n << ','
          << gc.total << ',' << gc.decomposed_estimate << ',' << format_double(ratio) << '\n';
      }
    }
  });
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Szegedy walk circuit compiler, verifier and quantum PageRank", "szegedy"};
  app.require_subcommand(1);
  RunConfig cfg;

  CLI::App* synth = app.add_subcommand("synth", "Emit the walk circuit");
  add_graph_options(*synth, cfg);
  synth->add_option("--format", cfg.format, "text or qasm")->capture_default_str();
  synth->add_option("--out", cfg.out, "Output file (default stdout)");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Check a circuit against the dense oracle");
  add_graph_options(*verify_cmd, cfg);
  verify_cmd->add_option("--tol", cfg.tol, "Deviation and leakage tolerance")
      ->capture_default_str();
  verify_cmd->add_option("--circuit", cfg.circuit_path, "Verify this circuit file instead");
  verify_cmd->add_option("--out", cfg.out, "Report file (default stdout)");

  CLI::App* simulate = app.add_subcommand("simulate", "Apply the walk to a state");
  add_graph_options(*simulate, cfg);
  simulate->add_option("--steps", cfg.steps, "Walk applications (default 1)");
  simulate->add_option("--initial", cfg.initial, "superposition, basis or random")
      ->capture_default_str();
  simulate->add_option("--basis", cfg.basis, "Basis index for --initial basis");
  simulate->add_option("--seed", cfg.seed, "Seed for --initial random")->capture_default_str();
  simulate->add_option("--circuit", cfg.circuit_path, "Simulate this circuit file instead");
  simulate->add_option("--out", cfg.out, "Output CSV (default stdout)");

  CLI::App* pagerank = app.add_subcommand("pagerank", "Quantum PageRank time series");
  add_graph_options(*pagerank, cfg);
  pagerank->add_option("--steps", cfg.steps, "Double steps T (default 1000)");
  pagerank->add_option("--backend", cfg.backend, "circuit or oracle")->capture_default_str();
  pagerank->add_option("--out", cfg.out, "Output directory (default .)");

  CLI::App* gatecount = app.add_subcommand("gatecount", "Gate-count scaling table");
  add_graph_options(*gatecount, cfg);
  gatecount->add_option("--from", cfg.from, "Smallest size exponent")->capture_default_str();
  gatecount->add_option("--to", cfg.to, "Largest size exponent")->capture_default_str();
  gatecount->add_option("--out", cfg.out, "Output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {  // also --help
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kInvalidInput;
  }

  try {
    if (synth->parsed()) return cmd_synth(cfg, out);
    if (verify_cmd->parsed()) return cmd_verify(cfg, out);
    if (simulate->parsed()) return cmd_simulate(cfg, out);
    if (pagerank->parsed()) return cmd_pagerank(cfg, out);
    if (gatecount->parsed()) return cmd_gatecount(cfg, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const LeakageError& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace szegedy::cli
