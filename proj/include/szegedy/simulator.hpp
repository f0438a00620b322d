#pragma once

// Dense statevector simulation of Circuit values.

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "szegedy/circuit.hpp"

namespace szegedy {

using Amplitude = std::complex<double>;

class StateVector {
 public:
  /// |0...0> on `width` qubits.
  explicit StateVector(int width = 0);

  static StateVector basis(int width, std::uint64_t index);
  /// `amplitudes.size()` must equal 2^width. No normalization check.
  static StateVector from_amplitudes(int width, std::vector<Amplitude> amplitudes);

  int width() const { return width_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  std::span<Amplitude> amplitudes() { return amplitudes_; }
  const Amplitude& operator[](std::size_t k) const { return amplitudes_[k]; }
  Amplitude& operator[](std::size_t k) { return amplitudes_[k]; }

  double squared_norm() const;

 private:
  int width_ = 0;
  std::vector<Amplitude> amplitudes_;
};

/// Applies one gate in place to a 2^width amplitude array.
void apply_gate(const Gate& gate, int width, std::span<Amplitude> amplitudes);

void apply_in_place(const Circuit& c, StateVector& s);
StateVector apply(const Circuit& c, StateVector s);

inline constexpr int kMaxUnitaryWidth = 12;

/// Column k is apply(c, |k>). Throws InvalidInput above kMaxUnitaryWidth.
Eigen::MatrixXcd unitary_of(const Circuit& c);

/// prob(j) = sum_i |<i, j|s>|^2 over the second n-qubit register.
std::vector<double> marginal_register2(const StateVector& s, int n);

/// Writes `index,re,im` rows under a versioned header comment.
void write_csv(const StateVector& s, std::ostream& out);

}  // namespace szegedy
