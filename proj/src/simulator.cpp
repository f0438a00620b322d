#include "szegedy/simulator.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "szegedy/errors.hpp"

namespace szegedy {

namespace {

using Mask = std::uint64_t;

Mask bit_of(int qubit, int width) {
  return Mask{1} << static_cast<unsigned>(width - 1 - qubit);
}

struct ControlMask {
  Mask mask = 0;
  Mask value = 0;

  bool satisfied(Mask index) const { return (index & mask) == value; }
};

ControlMask control_mask(const Gate& gate, int width) {
  ControlMask cm;
  for (const Control& c : gate.controls) {
    const Mask bit = bit_of(c.qubit, width);
    cm.mask |= bit;
    if (c.polarity == Polarity::One) cm.value |= bit;
  }
  return cm;
}

// Applies [[a, b], [c, d]] to every control-satisfied amplitude pair.
void apply_2x2(std::span<Amplitude> amps, Mask target, const ControlMask& cm,
               double a, double b, double c, double d) {
  const Mask dim = amps.size();
  for (Mask i = 0; i < dim; ++i) {
    if ((i & target) != 0 || !cm.satisfied(i)) continue;
    const Amplitude lo = amps[i];
    const Amplitude hi = amps[i | target];
    amps[i] = a * lo + b * hi;
    amps[i | target] = c * lo + d * hi;
  }
}

}  // namespace

StateVector::StateVector(int width) : width_(width) {
  if (width < 0 || width > 30) {
    throw InvalidInput("statevector width must lie in [0, 30]");
  }
  amplitudes_.assign(std::size_t{1} << width, Amplitude{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

StateVector StateVector::basis(int width, std::uint64_t index) {
  StateVector s(width);
  if (index >= s.dimension()) {
    throw InvalidInput("basis index " + std::to_string(index) +
                       " outside dimension " + std::to_string(s.dimension()));
  }
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[index] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(int width,
                                         std::vector<Amplitude> amplitudes) {
  StateVector s(width);
  if (amplitudes.size() != s.dimension()) {
    throw InvalidInput("amplitude count does not match 2^width");
  }
  s.amplitudes_ = std::move(amplitudes);
  return s;
}

double StateVector::squared_norm() const {
  double sum = 0.0;
  for (const Amplitude& a : amplitudes_) sum += std::norm(a);
  return sum;
}

void apply_gate(const Gate& gate, int width, std::span<Amplitude> amps) {
  const ControlMask cm = control_mask(gate, width);
  switch (gate.kind) {
    case GateKind::GlobalPhase:
      if (gate.sign < 0) {
        for (Amplitude& a : amps) a = -a;
      }
      return;
    case GateKind::PauliX:
      apply_2x2(amps, bit_of(gate.target, width), cm, 0, 1, 1, 0);
      return;
    case GateKind::Hadamard: {
      const double r = 1.0 / std::sqrt(2.0);
      apply_2x2(amps, bit_of(gate.target, width), cm, r, r, r, -r);
      return;
    }
    case GateKind::RyRotation: {
      const double c = std::cos(gate.angle);
      const double s = std::sin(gate.angle);
      apply_2x2(amps, bit_of(gate.target, width), cm, c, -s, s, c);
      return;
    }
    case GateKind::PhaseFlip:
    case GateKind::PrimedPhaseFlip: {
      const Mask t = bit_of(gate.target, width);
      const Mask want = gate.kind == GateKind::PhaseFlip ? t : 0;
      for (Mask i = 0; i < amps.size(); ++i) {
        if ((i & t) == want && cm.satisfied(i)) amps[i] = -amps[i];
      }
      return;
    }
    case GateKind::Swap: {
      const Mask a = bit_of(gate.target, width);
      const Mask b = bit_of(gate.other, width);
      for (Mask i = 0; i < amps.size(); ++i) {
        if ((i & a) != 0 && (i & b) == 0 && cm.satisfied(i)) {
          std::swap(amps[i], amps[i ^ a ^ b]);
        }
      }
      return;
    }
  }
}

void apply_in_place(const Circuit& c, StateVector& s) {
  if (c.width() != s.width()) {
    throw InvalidInput("apply: circuit width " + std::to_string(c.width()) +
                       " does not match state width " +
                       std::to_string(s.width()));
  }
  for (const Gate& gate : c.gates()) apply_gate(gate, c.width(), s.amplitudes());
}

StateVector apply(const Circuit& c, StateVector s) {
  apply_in_place(c, s);
  return s;
}

Eigen::MatrixXcd unitary_of(const Circuit& c) {
  if (c.width() > kMaxUnitaryWidth) {
    throw InvalidInput("unitary extraction limited to width " +
                       std::to_string(kMaxUnitaryWidth));
  }
  const std::size_t dim = std::size_t{1} << c.width();
  Eigen::MatrixXcd u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t k = 0; k < dim; ++k) {
    const StateVector column = apply(c, StateVector::basis(c.width(), k));
    for (std::size_t r = 0; r < dim; ++r) {
      u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) = column[r];
    }
  }
  return u;
}

std::vector<double> marginal_register2(const StateVector& s, int n) {
  if (s.width() != 2 * n) {
    throw InvalidInput("marginal_register2: state width must be 2n (got width " +
                       std::to_string(s.width()) + ", n " + std::to_string(n) +
                       ")");
  }
  const std::size_t reg = std::size_t{1} << n;
  std::vector<double> prob(reg, 0.0);
  for (std::size_t i = 0; i < reg; ++i) {
    for (std::size_t j = 0; j < reg; ++j) prob[j] += std::norm(s[i * reg + j]);
  }
  return prob;
}

void write_csv(const StateVector& s, std::ostream& out) {
  out << "# szegedy-statevector v1 width=" << s.width() << '\n'
      << "index,re,im\n";
  out.precision(17);
  for (std::size_t k = 0; k < s.dimension(); ++k) {
    out << k << ',' << s[k].real() << ',' << s[k].imag() << '\n';
  }
}

}  // namespace szegedy
