#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "szegedy/errors.hpp"
#include "szegedy/synth.hpp"

namespace szegedy {

namespace {

constexpr double kNormTolerance = 1e-10;
// Split angles closer than this are treated as one uncontrolled rotation.
constexpr double kAngleMergeTolerance = 1e-14;

// Angle t with cos^2 t = zero_mass / (zero_mass + one_mass).
double split_angle(double zero_mass, double one_mass) {
  if (zero_mass == 0.0) return std::numbers::pi / 2;
  return std::atan2(std::sqrt(one_mass), std::sqrt(zero_mass));
}

// A split with no mass on the 0 side is a plain bit flip: the qubit is
// still |0> on every branch that reaches it.
Gate split_gate(int qubit, double angle, std::vector<Control> ctrl) {
  if (angle == std::numbers::pi / 2) return Gate::x(qubit, std::move(ctrl));
  return Gate::ry(qubit, angle, std::move(ctrl));
}

void append_basis_flip(Circuit& c, std::uint64_t from, std::uint64_t to) {
  const int n = c.width();
  const std::uint64_t diff = from ^ to;
  for (int q = 0; q < n; ++q) {
    if ((diff >> (n - 1 - q)) & 1U) c.append(Gate::x(q));
  }
}

}  // namespace

Preparation state_prep(std::span<const double> target, std::uint64_t basis) {
  const std::size_t dim = target.size();
  if (dim == 0 || !is_power_of_two(dim)) {
    throw InvalidInput("state_prep target length must be a power of two");
  }
  double norm = 0.0;
  for (std::size_t k = 0; k < dim; ++k) {
    if (!(target[k] >= 0.0)) {
      throw InvalidInput("state_prep target entry " + std::to_string(k) +
                         " is negative or not a number");
    }
    norm += target[k] * target[k];
  }
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw InvalidInput("state_prep target is not unit norm (squared norm " +
                       std::to_string(norm) + ")");
  }
  const int n = ceil_log2(dim);
  if (basis >= dim) throw InvalidInput("state_prep basis index out of range");

  std::vector<double> mass(dim);
  for (std::size_t k = 0; k < dim; ++k) mass[k] = target[k] * target[k];

  Preparation prep{Circuit(n), basis};
  append_basis_flip(prep.circuit, basis, 0);

  const std::vector<int> qubits = qubit_range(0, n);
  for (int level = 0; level < n; ++level) {
    const std::size_t half = dim >> (level + 1);
    std::vector<std::pair<std::uint64_t, double>> splits;
    for (std::uint64_t prefix = 0; prefix < (std::uint64_t{1} << level); ++prefix) {
      const std::size_t start = prefix * 2 * half;
      double zero_mass = 0.0;
      double one_mass = 0.0;
      for (std::size_t k = 0; k < half; ++k) {
        zero_mass += mass[start + k];
        one_mass += mass[start + half + k];
      }
      if (zero_mass + one_mass <= 0.0) continue;
      splits.emplace_back(prefix, split_angle(zero_mass, one_mass));
    }
    if (splits.empty()) continue;
    bool uniform = true;
    for (const auto& [prefix, angle] : splits) {
      if (std::abs(angle - splits.front().second) > kAngleMergeTolerance) {
        uniform = false;
        break;
      }
    }
    if (uniform) {
      if (splits.front().second != 0.0) {
        prep.circuit.append(split_gate(level, splits.front().second, {}));
      }
      continue;
    }
    for (const auto& [prefix, angle] : splits) {
      if (angle == 0.0) continue;
      prep.circuit.append(split_gate(
          level, angle,
          basis_pattern(prefix, std::span<const int>(qubits).first(
                                    static_cast<std::size_t>(level)))));
    }
  }
  return prep;
}

Preparation kb_cycle(int n) {
  if (n < 2) throw InvalidInput("kb_cycle needs n >= 2");
  Preparation prep{Circuit(n), (std::uint64_t{1} << (n - 1)) - 1};
  // |0 1...1> -> (|0 1...1> + |1 1...1>)/sqrt 2 -> (|0...0 1> + |1...1>)/sqrt 2
  prep.circuit.append(Gate::h(0));
  for (int q = 1; q < n - 1; ++q) prep.circuit.append(Gate::x(q, {on0(0)}));
  return prep;
}

Preparation kb_complete(int n) {
  if (n < 1) throw InvalidInput("kb_complete needs n >= 1");
  Preparation prep{Circuit(n), 1};
  Circuit& c = prep.circuit;
  // Rotation cascade: along the all-zero prefix, qubit i-1 stays |0> with
  // the mass of the 2^(n-i) - 1 nonzero values below it. Each branch that
  // took a 1 is uniformized afterwards, last branch first.
  for (int i = 1; i < n; ++i) {
    const double stay = std::ldexp(1.0, n - i) - 1.0;
    const double whole = std::ldexp(1.0, n - i + 1) - 1.0;
    std::vector<Control> ctrl;
    for (int q = 0; q < i - 1; ++q) ctrl.push_back(on0(q));
    c.append(Gate::ry(i - 1, std::acos(std::sqrt(stay / whole)), std::move(ctrl)));
  }
  for (int q = n - 2; q >= 0; --q) {
    c.append(Gate::x(n - 1, {on1(q)}));
    for (int tail = q + 1; tail < n; ++tail) c.append(Gate::h(tail, {on1(q)}));
  }
  return prep;
}

Preparation rebased(const Preparation& prep, std::uint64_t new_basis) {
  const int n = prep.circuit.width();
  if (n < 64 && new_basis >= (std::uint64_t{1} << n)) {
    throw InvalidInput("rebased: basis index out of range");
  }
  Preparation out{Circuit(n), new_basis};
  append_basis_flip(out.circuit, new_basis, prep.basis);
  out.circuit.append(prep.circuit);
  return out;
}

}  // namespace szegedy
