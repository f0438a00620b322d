#include <algorithm>
#include <vector>

#include "szegedy/errors.hpp"
#include "szegedy/synth.hpp"

namespace szegedy {

namespace {

// +1 (or -1) on `reg`: flip each qubit, most significant first, when every
// lower qubit is 1 (increment) or 0 (decrement).
void append_unit_step(Circuit& c, std::span<const int> reg, ShiftDirection direction,
                      std::span<const Control> controls) {
  const Polarity carry =
      direction == ShiftDirection::Right ? Polarity::One : Polarity::Zero;
  for (std::size_t pos = 0; pos < reg.size(); ++pos) {
    std::vector<Control> ctrl(controls.begin(), controls.end());
    for (std::size_t lower = pos + 1; lower < reg.size(); ++lower) {
      ctrl.push_back({reg[lower], carry});
    }
    c.append(Gate::x(reg[pos], std::move(ctrl)));
  }
}

}  // namespace

void append_shift(Circuit& c, std::span<const int> reg, std::uint64_t amount,
                  ShiftDirection direction, std::span<const Control> controls) {
  const std::size_t n = reg.size();
  if (n == 0) return;
  if (n < 64) amount &= (std::uint64_t{1} << n) - 1;
  for (std::size_t k = 0; k < n && k < 64; ++k) {
    if (((amount >> k) & 1U) == 0) continue;
    // Adding 2^k only touches the top n-k qubits.
    append_unit_step(c, reg.first(n - k), direction, controls);
  }
}

Circuit shift_circuit(int n, std::uint64_t amount, ShiftDirection direction,
                      std::span<const Control> controls) {
  if (n < 1) throw InvalidInput("shift_circuit needs n >= 1");
  int width = n;
  for (const Control& ctrl : controls) width = std::max(width, ctrl.qubit + 1);
  Circuit c(width);
  const std::vector<int> reg = qubit_range(0, n);
  append_shift(c, reg, amount, direction, controls);
  return c;
}

Circuit controlled_shift_transform(int n, std::uint64_t offset_x,
                                   ShiftDirection direction) {
  if (n < 1) throw InvalidInput("controlled_shift_transform needs n >= 1");
  Circuit c(2 * n);
  const std::vector<int> reg2 = qubit_range(n, n);
  for (int k = 0; k < n; ++k) {
    // Bit k of register 1 lives on qubit n-1-k.
    const Control bit = on1(n - 1 - k);
    const std::uint64_t amount = k < 64 ? offset_x << k : 0;
    append_shift(c, reg2, amount, direction, std::span<const Control>(&bit, 1));
  }
  return c;
}

}  // namespace szegedy
