#include "szegedy/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "szegedy/errors.hpp"

namespace szegedy {

namespace {

std::vector<Control> merge_controls(const std::vector<Control>& existing,
                                    std::span<const Control> added) {
  std::vector<Control> merged = existing;
  for (const Control& c : added) {
    auto same = std::find_if(merged.begin(), merged.end(),
                             [&](const Control& m) { return m.qubit == c.qubit; });
    if (same == merged.end()) {
      merged.push_back(c);
    } else if (same->polarity != c.polarity) {
      throw InvalidInput("conflicting control polarities on qubit " +
                         std::to_string(c.qubit));
    }
  }
  return merged;
}

}  // namespace

Gate Gate::x(int target, std::vector<Control> controls) {
  return Gate{GateKind::PauliX, target, -1, 0.0, 1, std::move(controls)};
}

Gate Gate::h(int target, std::vector<Control> controls) {
  return Gate{GateKind::Hadamard, target, -1, 0.0, 1, std::move(controls)};
}

Gate Gate::ry(int target, double angle, std::vector<Control> controls) {
  return Gate{GateKind::RyRotation, target, -1, angle, 1, std::move(controls)};
}

Gate Gate::phase_flip(int target, std::vector<Control> controls) {
  return Gate{GateKind::PhaseFlip, target, -1, 0.0, 1, std::move(controls)};
}

Gate Gate::primed_phase_flip(int target, std::vector<Control> controls) {
  return Gate{GateKind::PrimedPhaseFlip, target, -1, 0.0, 1,
              std::move(controls)};
}

Gate Gate::swap(int a, int b, std::vector<Control> controls) {
  return Gate{GateKind::Swap, a, b, 0.0, 1, std::move(controls)};
}

Gate Gate::global_phase(int sign) {
  return Gate{GateKind::GlobalPhase, -1, -1, 0.0, sign, {}};
}

std::vector<int> Gate::operands() const {
  switch (kind) {
    case GateKind::GlobalPhase:
      return {};
    case GateKind::Swap:
      return {target, other};
    default:
      return {target};
  }
}

Gate Gate::inverse() const {
  Gate inv = *this;
  if (kind == GateKind::RyRotation) inv.angle = -angle;
  return inv;
}

Circuit::Circuit(int width) : width_(width) {
  if (width < 0) throw InvalidInput("circuit width must be non-negative");
}

Circuit& Circuit::append(Gate gate) {
  const auto in_range = [this](int q) { return q >= 0 && q < width_; };
  if (gate.kind == GateKind::GlobalPhase) {
    if (gate.sign != 1 && gate.sign != -1) {
      throw InvalidInput("global phase sign must be +1 or -1");
    }
    if (!gate.controls.empty()) {
      throw InvalidInput("global phase gates cannot carry controls");
    }
    gates_.push_back(std::move(gate));
    return *this;
  }
  if (gate.kind == GateKind::RyRotation && !std::isfinite(gate.angle)) {
    throw InvalidInput("rotation angle must be finite");
  }
  const std::vector<int> operands = gate.operands();
  for (int q : operands) {
    if (!in_range(q)) {
      throw InvalidInput("operand qubit " + std::to_string(q) +
                         " outside circuit width " + std::to_string(width_));
    }
  }
  if (gate.kind == GateKind::Swap && gate.target == gate.other) {
    throw InvalidInput("swap operands must differ");
  }
  for (std::size_t k = 0; k < gate.controls.size(); ++k) {
    const int q = gate.controls[k].qubit;
    if (!in_range(q)) {
      throw InvalidInput("control qubit " + std::to_string(q) +
                         " outside circuit width " + std::to_string(width_));
    }
    if (std::find(operands.begin(), operands.end(), q) != operands.end()) {
      throw InvalidInput("control qubit " + std::to_string(q) +
                         " overlaps a gate operand");
    }
    for (std::size_t m = 0; m < k; ++m) {
      if (gate.controls[m].qubit == q) {
        throw InvalidInput("duplicate control qubit " + std::to_string(q));
      }
    }
  }
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.width_ != width_) {
    throw InvalidInput("cannot append circuit of width " +
                       std::to_string(other.width_) + " to width " +
                       std::to_string(width_));
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

Circuit compose(const Circuit& a, const Circuit& b) {
  if (a.width() != b.width()) {
    throw InvalidInput("compose: width mismatch (" + std::to_string(a.width()) +
                       " vs " + std::to_string(b.width()) + ")");
  }
  Circuit out = a;
  out.append(b);
  return out;
}

Circuit dagger(const Circuit& c) {
  Circuit out(c.width());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
    out.append(it->inverse());
  }
  return out;
}

Circuit with_controls(const Circuit& c, std::span<const Control> controls) {
  Circuit out(c.width());
  for (const Gate& gate : c.gates()) {
    if (gate.kind == GateKind::GlobalPhase) {
      if (gate.sign == 1) continue;
      if (controls.empty()) {
        out.append(gate);
        continue;
      }
      // -1 on the control-satisfied subspace is a phase flip whose target is
      // one of the controls.
      const Control pivot = controls.back();
      std::vector<Control> rest(controls.begin(), controls.end() - 1);
      out.append(pivot.polarity == Polarity::One
                     ? Gate::phase_flip(pivot.qubit, std::move(rest))
                     : Gate::primed_phase_flip(pivot.qubit, std::move(rest)));
      continue;
    }
    const std::vector<int> operands = gate.operands();
    for (const Control& ctrl : controls) {
      if (std::find(operands.begin(), operands.end(), ctrl.qubit) !=
          operands.end()) {
        throw InvalidInput("with_controls: control qubit " +
                           std::to_string(ctrl.qubit) +
                           " overlaps a gate operand");
      }
    }
    Gate controlled = gate;
    controlled.controls = merge_controls(gate.controls, controls);
    out.append(std::move(controlled));
  }
  return out;
}

Circuit relabel(const Circuit& c, std::span<const int> qubit_map, int width) {
  if (qubit_map.size() != static_cast<std::size_t>(c.width())) {
    throw InvalidInput("relabel: map size must equal circuit width");
  }
  for (std::size_t k = 0; k < qubit_map.size(); ++k) {
    if (qubit_map[k] < 0 || qubit_map[k] >= width) {
      throw InvalidInput("relabel: mapped qubit outside target width");
    }
    for (std::size_t m = 0; m < k; ++m) {
      if (qubit_map[m] == qubit_map[k]) {
        throw InvalidInput("relabel: qubit map is not injective");
      }
    }
  }
  Circuit out(width);
  for (Gate gate : c.gates()) {
    if (gate.target >= 0) gate.target = qubit_map[static_cast<std::size_t>(gate.target)];
    if (gate.other >= 0) gate.other = qubit_map[static_cast<std::size_t>(gate.other)];
    for (Control& ctrl : gate.controls) {
      ctrl.qubit = qubit_map[static_cast<std::size_t>(ctrl.qubit)];
    }
    out.append(std::move(gate));
  }
  return out;
}

GateCount gate_count(const Circuit& c) {
  GateCount count;
  count.total = c.size();
  for (const Gate& gate : c.gates()) {
    const std::size_t k = gate.controls.size();
    count.decomposed_estimate += k >= 2 ? 2 * (k - 1) + 1 : 1;
  }
  return count;
}

std::vector<Control> basis_pattern(std::uint64_t value,
                                   std::span<const int> qubits) {
  std::vector<Control> pattern;
  pattern.reserve(qubits.size());
  const std::size_t n = qubits.size();
  for (std::size_t k = 0; k < n; ++k) {
    const bool bit = (value >> (n - 1 - k)) & 1U;
    pattern.push_back({qubits[k], bit ? Polarity::One : Polarity::Zero});
  }
  return pattern;
}

std::vector<int> qubit_range(int first, int count) {
  std::vector<int> qubits(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) qubits[static_cast<std::size_t>(k)] = first + k;
  return qubits;
}

}  // namespace szegedy
