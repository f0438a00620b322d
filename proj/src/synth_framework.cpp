#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "szegedy/errors.hpp"
#include "szegedy/oracle.hpp"
#include "szegedy/simulator.hpp"
#include "szegedy/synth.hpp"

namespace szegedy {

namespace {

constexpr double kPreconditionTolerance = 1e-10;

// I - 2 |b><b| on `reg`, restricted to the `extra` control pattern. With an
// empty register and no controls this degenerates to the scalar -1.
void append_basis_phase_flip(Circuit& c, std::span<const int> reg, std::uint64_t b,
                             const std::vector<Control>& extra) {
  std::vector<Control> pattern = extra;
  const std::vector<Control> on_b = basis_pattern(b, reg);
  pattern.insert(pattern.end(), on_b.begin(), on_b.end());
  if (pattern.empty()) {
    c.append(Gate::global_phase(-1));
    return;
  }
  const Control pivot = pattern.back();
  pattern.pop_back();
  c.append(pivot.polarity == Polarity::One
               ? Gate::phase_flip(pivot.qubit, std::move(pattern))
               : Gate::primed_phase_flip(pivot.qubit, std::move(pattern)));
}

void append_register_swap(Circuit& c, int n) {
  for (int k = 0; k < n; ++k) c.append(Gate::swap(k, n + k));
}

Circuit on_register2(const Circuit& sub, int n) {
  const std::vector<int> reg2 = qubit_range(n, n);
  return relabel(sub, reg2, 2 * n);
}

void require_register2_only(const Circuit& transform, int n, const std::string& what) {
  for (const Gate& gate : transform.gates()) {
    for (int q : gate.operands()) {
      if (q < n) {
        throw SynthesisError(what + " acts on register 1 (qubit " +
                             std::to_string(q) + ")");
      }
    }
  }
}

// The transform with register 1 fixed to |y>: register-1 controls are
// resolved against y, everything else moves down onto qubits 0..n-1.
Circuit slice_for_member(const Circuit& transform, int n, std::uint64_t y) {
  Circuit out(n);
  for (const Gate& gate : transform.gates()) {
    Gate g = gate;
    g.controls.clear();
    bool fires = true;
    for (const Control& ctrl : gate.controls) {
      if (ctrl.qubit < n) {
        const bool bit = (y >> (n - 1 - ctrl.qubit)) & 1U;
        fires = fires && bit == (ctrl.polarity == Polarity::One);
      } else {
        g.controls.push_back({ctrl.qubit - n, ctrl.polarity});
      }
    }
    if (!fires) continue;
    if (g.kind != GateKind::GlobalPhase) g.target -= n;
    if (g.kind == GateKind::Swap) g.other -= n;
    out.append(std::move(g));
  }
  return out;
}

std::vector<Amplitude> embedded_column(const TransitionMatrix& p, std::size_t i, int n) {
  std::vector<Amplitude> phi(std::size_t{1} << n, Amplitude{0.0, 0.0});
  for (std::size_t j = 0; j < p.size(); ++j) phi[j] = std::sqrt(p(j, i));
  return phi;
}

double max_abs_diff(std::span<const Amplitude> a, std::span<const Amplitude> b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

}  // namespace

Circuit synth_single_reference(int n, const Circuit& transform, const Circuit& kb,
                               std::uint64_t basis_b) {
  if (n < 0 || transform.width() != 2 * n || kb.width() != n) {
    throw InvalidInput("synth_single_reference: transform must have width 2n and "
                       "kb width n");
  }
  if (n < 64 && basis_b >= (std::uint64_t{1} << n)) {
    throw InvalidInput("synth_single_reference: basis state out of range");
  }
  require_register2_only(transform, n, "transform");
  const Circuit kb2 = on_register2(kb, n);
  const std::vector<int> reg2 = qubit_range(n, n);

  Circuit c(2 * n);
  c.append(transform);
  c.append(dagger(kb2));
  append_basis_phase_flip(c, reg2, basis_b, {});
  c.append(Gate::global_phase(-1));
  c.append(kb2);
  c.append(dagger(transform));
  append_register_swap(c, n);
  return c;
}

Circuit synth_single_reference(const Diagonalizer& d) {
  return synth_single_reference(d.n, d.transform, d.prep.circuit, d.prep.basis);
}

Diagonalizer circulant_diagonalizer(std::span<const double> phi0, std::uint64_t offset_x) {
  if (phi0.size() < 2 || !is_power_of_two(phi0.size())) {
    throw InvalidInput("circulant synthesis needs N = 2^n >= 2 states");
  }
  const int n = ceil_log2(phi0.size());
  return Diagonalizer{n, controlled_shift_transform(n, offset_x, ShiftDirection::Left),
                      state_prep(phi0, 0)};
}

Diagonalizer circulant_diagonalizer(CirculantGraph graph, int n) {
  switch (graph) {
    case CirculantGraph::Cycle:
      return Diagonalizer{n, controlled_shift_transform(n, 1), kb_cycle(n)};
    case CirculantGraph::Complete:
      return Diagonalizer{n, controlled_shift_transform(n, 1), kb_complete(n)};
  }
  throw InvalidInput("unknown circulant graph");
}

Diagonalizer k2_diagonalizer() {
  return circulant_diagonalizer(CirculantGraph::Complete, 1);
}

Diagonalizer trivial_diagonalizer() { return Diagonalizer{0, Circuit(0), {Circuit(0), 0}}; }

Diagonalizer rebased(const Diagonalizer& d, std::uint64_t new_basis) {
  return Diagonalizer{d.n, d.transform, rebased(d.prep, new_basis)};
}

Diagonalizer tensor_diagonalizer(const Diagonalizer& first, const Diagonalizer& second) {
  const int n1 = first.n;
  const int n2 = second.n;
  const int n = n1 + n2;
  // Combined registers: (i, j) then (phi_i, phi_j).
  std::vector<int> map1 = qubit_range(0, n1);
  for (int q : qubit_range(n, n1)) map1.push_back(q);
  std::vector<int> map2 = qubit_range(n1, n2);
  for (int q : qubit_range(n + n1, n2)) map2.push_back(q);

  Diagonalizer out{n, Circuit(2 * n), {Circuit(n), 0}};
  out.transform.append(relabel(first.transform, map1, 2 * n));
  out.transform.append(relabel(second.transform, map2, 2 * n));
  out.prep.circuit.append(relabel(first.prep.circuit, qubit_range(0, n1), n));
  out.prep.circuit.append(relabel(second.prep.circuit, qubit_range(n1, n2), n));
  out.prep.basis = (first.prep.basis << n2) | second.prep.basis;
  return out;
}

Circuit synth_circulant(std::span<const double> phi0, std::uint64_t offset_x) {
  return synth_single_reference(circulant_diagonalizer(phi0, offset_x));
}

Circuit synth_circulant(CirculantGraph graph, int n) {
  return synth_single_reference(circulant_diagonalizer(graph, n));
}

Circuit synth_k2() { return synth_single_reference(k2_diagonalizer()); }

Circuit synth_tensor(const Diagonalizer& first, const Diagonalizer& second) {
  return synth_single_reference(tensor_diagonalizer(first, second));
}

Circuit synth_crown(int n) {
  if (n < 2) throw InvalidInput("synth_crown needs n >= 2");
  return synth_tensor(rebased(circulant_diagonalizer(CirculantGraph::Complete, n), 0),
                      k2_diagonalizer());
}

// ---------------------------------------------------------------------------

void Partition::validate(std::size_t n_states, int n_qubits) const {
  if (subsets.empty()) throw InvalidInput("partition has no subsets");
  if (references.size() != subsets.size() || basis.size() != subsets.size()) {
    throw InvalidInput("partition needs one reference and one basis per subset");
  }
  std::vector<int> owner(n_states, -1);
  for (std::size_t x = 0; x < subsets.size(); ++x) {
    if (subsets[x].empty()) {
      throw InvalidInput("partition subset " + std::to_string(x) + " is empty");
    }
    for (std::size_t y : subsets[x]) {
      if (y >= n_states) {
        throw InvalidInput("partition member " + std::to_string(y) + " out of range");
      }
      if (owner[y] != -1) {
        throw InvalidInput("vertex " + std::to_string(y) + " appears in two subsets");
      }
      owner[y] = static_cast<int>(x);
    }
    if (std::find(subsets[x].begin(), subsets[x].end(), references[x]) ==
        subsets[x].end()) {
      throw InvalidInput("reference of subset " + std::to_string(x) +
                         " is not a member");
    }
    if (n_qubits < 64 && basis[x] >= (std::uint64_t{1} << n_qubits)) {
      throw InvalidInput("basis state of subset " + std::to_string(x) +
                         " out of range");
    }
  }
  for (std::size_t y = 0; y < n_states; ++y) {
    if (owner[y] == -1) {
      throw InvalidInput("vertex " + std::to_string(y) + " is in no subset");
    }
  }
}

Circuit transform_from_members(int n, std::span<const MemberTransform> members) {
  Circuit c(2 * n);
  const std::vector<int> reg1 = qubit_range(0, n);
  for (const MemberTransform& m : members) {
    if (m.circuit.width() != n) {
      throw InvalidInput("member transform must act on one n-qubit register");
    }
    const std::vector<Control> select = basis_pattern(m.member, reg1);
    c.append(with_controls(on_register2(m.circuit, n), select));
  }
  return c;
}

std::vector<std::vector<Control>> subset_patterns(std::span<const std::size_t> members,
                                                  std::size_t n_states,
                                                  std::span<const int> qubits) {
  const std::size_t n = qubits.size();
  const std::size_t dim = std::size_t{1} << n;
  // 1 member, 0 valid non-member, -1 invalid (don't care)
  std::vector<int> status(dim, -1);
  for (std::size_t k = 0; k < std::min(n_states, dim); ++k) status[k] = 0;
  for (std::size_t y : members) {
    if (y >= n_states || y >= dim) {
      throw InvalidInput("subset member " + std::to_string(y) + " out of range");
    }
    status[y] = 1;
  }
  std::vector<std::vector<Control>> patterns;
  const auto visit = [&](const auto& self, std::uint64_t prefix, std::size_t depth) -> void {
    const std::size_t span = dim >> depth;
    const std::size_t start = prefix * span;
    bool any_member = false;
    bool any_outsider = false;
    for (std::size_t k = start; k < start + span; ++k) {
      any_member |= status[k] == 1;
      any_outsider |= status[k] == 0;
    }
    if (!any_member) return;
    if (!any_outsider) {
      patterns.push_back(basis_pattern(prefix, qubits.first(depth)));
      return;
    }
    self(self, prefix * 2, depth + 1);
    self(self, prefix * 2 + 1, depth + 1);
  };
  visit(visit, 0, 0);
  return patterns;
}

Circuit synth_partitioned(const TransitionMatrix& p, const Partition& z,
                          std::span<const SubsetCircuits> parts) {
  const std::size_t n_states = p.size();
  const int n = register_width(n_states);
  z.validate(n_states, n);
  if (parts.size() != z.subsets.size()) {
    throw InvalidInput("synth_partitioned: one SubsetCircuits per subset required");
  }

  for (std::size_t x = 0; x < parts.size(); ++x) {
    const SubsetCircuits& part = parts[x];
    const std::string tag = "subset " + std::to_string(x);
    if (part.prep.width() != n) {
      throw InvalidInput(tag + ": preparation must have width " + std::to_string(n));
    }
    if (!part.transform.empty() && part.transform.width() != 2 * n) {
      throw InvalidInput(tag + ": transform must have width " + std::to_string(2 * n));
    }
    require_register2_only(part.transform, n, tag + " transform");

    const std::vector<Amplitude> reference = embedded_column(p, z.references[x], n);
    const StateVector prepared = apply(part.prep, StateVector::basis(n, z.basis[x]));
    const double prep_error = max_abs_diff(prepared.amplitudes(), reference);
    if (prep_error > kPreconditionTolerance) {
      throw SynthesisError(tag + ": K_b does not prepare the reference column " +
                           std::to_string(z.references[x]) + " (error " +
                           std::to_string(prep_error) + ")");
    }
    if (part.transform.empty()) {
      for (std::size_t y : z.subsets[x]) {
        const double err = max_abs_diff(embedded_column(p, y, n), reference);
        if (err > kPreconditionTolerance) {
          throw SynthesisError(tag + ", member " + std::to_string(y) +
                               ": identity transform but column differs from "
                               "the reference (error " + std::to_string(err) + ")");
        }
      }
      continue;
    }
    for (std::size_t y : z.subsets[x]) {
      const StateVector moved =
          apply(slice_for_member(part.transform, n, y),
                StateVector::from_amplitudes(n, embedded_column(p, y, n)));
      const double err = max_abs_diff(moved.amplitudes(), reference);
      if (err > kPreconditionTolerance) {
        throw SynthesisError(tag + ", member " + std::to_string(y) +
                             ": T does not map the column onto the reference "
                             "(error " + std::to_string(err) + ")");
      }
    }
  }

  const std::vector<int> reg1 = qubit_range(0, n);
  const std::vector<int> reg2 = qubit_range(n, n);
  Circuit c(2 * n);
  for (std::size_t x = 0; x < parts.size(); ++x) {
    const auto patterns = subset_patterns(z.subsets[x], n_states, reg1);
    const Circuit kb2 = on_register2(parts[x].prep, n);
    const Circuit kb2_dagger = dagger(kb2);
    if (!parts[x].transform.empty()) c.append(parts[x].transform);
    for (const auto& pattern : patterns) c.append(with_controls(kb2_dagger, pattern));
    for (const auto& pattern : patterns) {
      append_basis_phase_flip(c, reg2, z.basis[x], pattern);
    }
    for (const auto& pattern : patterns) c.append(with_controls(kb2, pattern));
    if (!parts[x].transform.empty()) c.append(dagger(parts[x].transform));
  }
  // Each segment above is I - 2 Pi_x; the product is I - 2 Pi, one sign
  // away from the reflection.
  c.append(Gate::global_phase(-1));
  append_register_swap(c, n);
  return c;
}

Partition partition_by_equal_columns(const TransitionMatrix& p, double tolerance) {
  Partition z;
  for (std::size_t j = 0; j < p.size(); ++j) {
    bool placed = false;
    for (std::size_t x = 0; x < z.subsets.size() && !placed; ++x) {
      const double diff =
          (p.column(j) - p.column(z.references[x])).cwiseAbs().maxCoeff();
      if (diff <= tolerance) {
        z.subsets[x].push_back(j);
        placed = true;
      }
    }
    if (!placed) {
      z.subsets.push_back({j});
      z.references.push_back(j);
      z.basis.push_back(0);
    }
  }
  return z;
}

Circuit synth_equal_columns(const TransitionMatrix& p) {
  const int n = register_width(p.size());
  const Partition z = partition_by_equal_columns(p);
  std::vector<SubsetCircuits> parts;
  for (std::size_t x = 0; x < z.subsets.size(); ++x) {
    std::vector<double> target(std::size_t{1} << n, 0.0);
    for (std::size_t j = 0; j < p.size(); ++j) target[j] = std::sqrt(p(j, z.references[x]));
    parts.push_back({Circuit(2 * n), state_prep(target, z.basis[x]).circuit});
  }
  return synth_partitioned(p, z, parts);
}

// ---------------------------------------------------------------------------

std::string VerifyReport::to_json() const {
  const nlohmann::json j = {{"max_deviation", max_deviation},
                            {"leakage", leakage},
                            {"tolerance", tolerance},
                            {"pass", passed}};
  return j.dump();
}

VerifyReport verify(const Circuit& circuit, const TransitionMatrix& p, double tolerance) {
  const std::size_t n_states = p.size();
  const int n = register_width(n_states);
  if (circuit.width() != 2 * n) {
    throw InvalidInput("verify: circuit width " + std::to_string(circuit.width()) +
                       " but the chain needs " + std::to_string(2 * n));
  }
  const WalkOracle oracle = walk_operator(p);
  const std::size_t reg = std::size_t{1} << n;

  std::vector<bool> valid(reg * reg, false);
  for (std::size_t i = 0; i < n_states; ++i) {
    for (std::size_t j = 0; j < n_states; ++j) valid[embedded_index(i, j, n)] = true;
  }

  VerifyReport report;
  report.tolerance = tolerance;
  for (std::size_t col = 0; col < n_states * n_states; ++col) {
    const StateVector image = apply(
        circuit, StateVector::basis(2 * n, embedded_index(col / n_states, col % n_states, n)));
    double outside = 0.0;
    for (std::size_t r = 0; r < reg * reg; ++r) {
      Amplitude expected{0.0, 0.0};
      if (valid[r]) {
        const std::size_t i = r >> n;
        const std::size_t j = r & (reg - 1);
        expected = oracle.matrix(static_cast<Eigen::Index>(i * n_states + j),
                                 static_cast<Eigen::Index>(col));
      } else {
        outside += std::norm(image[r]);
      }
      report.max_deviation = std::max(report.max_deviation, std::abs(image[r] - expected));
    }
    report.leakage = std::max(report.leakage, outside);
  }
  report.passed = report.max_deviation <= tolerance && report.leakage <= tolerance;
  return report;
}

}  // namespace szegedy
