#include <cmath>
#include <numbers>
#include <vector>

#include "szegedy/errors.hpp"
#include "szegedy/synth.hpp"

namespace szegedy {

namespace {

double angle_from_cos2(double cos2) { return std::acos(std::sqrt(cos2)); }

void append_hadamards(Circuit& c, int first, int count, const std::vector<Control>& ctrl) {
  for (int q = first; q < first + count; ++q) c.append(Gate::h(q, ctrl));
}

// (|1> + |2^k - 1>)/sqrt 2 from |0> on qubits first..first+k-1.
void append_cycle_pair(Circuit& c, int first, int k, const std::vector<Control>& ctrl) {
  const Circuit pair = rebased(kb_cycle(k), 0).circuit;
  const Circuit placed = relabel(pair, qubit_range(first, k), c.width());
  c.append(with_controls(placed, ctrl));
}

// Left shift of the register-2 qubits [first, first + count) by register-1
// value bits k < bits, under `extra`.
Circuit member_shift(int n, int first, int count, int bits,
                     const std::vector<Control>& extra) {
  Circuit c(2 * n);
  const std::vector<int> reg = qubit_range(first, count);
  for (int k = 0; k < bits; ++k) {
    std::vector<Control> ctrl = extra;
    ctrl.push_back(on1(n - 1 - k));
    append_shift(c, reg, std::uint64_t{1} << k, ShiftDirection::Left, ctrl);
  }
  return c;
}

std::vector<std::size_t> index_range(std::size_t first, std::size_t count) {
  std::vector<std::size_t> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = first + k;
  return out;
}

}  // namespace

Circuit synth_bipartite(int n1, int n2) {
  if (n2 < 0 || n1 < n2 || n1 > 20) {
    throw InvalidInput("bipartite synthesis needs n1 >= n2 >= 0");
  }
  const std::size_t size1 = std::size_t{1} << n1;
  const std::size_t size2 = std::size_t{1} << n2;
  const int n = n1 + 1;
  const TransitionMatrix p = complete_bipartite(size1, size2);

  Partition z;
  z.subsets = {index_range(0, size1), index_range(size1, size2)};
  z.references = {0, size1};
  z.basis = {0, 0};

  Circuit prep1(n);
  prep1.append(Gate::x(0));
  append_hadamards(prep1, n - n2, n2, {});
  Circuit prep2(n);
  append_hadamards(prep2, 1, n1, {});

  const std::vector<SubsetCircuits> parts = {{Circuit(2 * n), prep1},
                                             {Circuit(2 * n), prep2}};
  return synth_partitioned(p, z, parts);
}

Circuit synth_win_cycles(int n1, int n2) {
  if (n2 < 2 || n1 < n2 || n1 > 20) {
    throw InvalidInput("WIN synthesis needs n1 >= n2 >= 2");
  }
  const std::size_t size1 = std::size_t{1} << n1;
  const std::size_t size2 = std::size_t{1} << n2;
  const int n = n1 + 1;
  const TransitionMatrix p = win_cycles(size1, size2);
  const double d1 = static_cast<double>(size1);
  const double d2 = static_cast<double>(size2);

  Partition z;
  z.subsets = {index_range(0, size1), index_range(size1, size2)};
  z.references = {0, size1};
  z.basis = {0, 0};

  // Column 0: cycle neighbours 1 and N1-1, then all of the second block.
  Circuit prep1(n);
  prep1.append(Gate::ry(0, angle_from_cos2(2.0 / (2.0 + d2))));
  append_cycle_pair(prep1, 1, n1, {on0(0)});
  append_hadamards(prep1, n - n2, n2, {on1(0)});

  // Column N1: all of the first block, then N1+1 and N1+N2-1.
  Circuit prep2(n);
  prep2.append(Gate::ry(0, angle_from_cos2(d1 / (2.0 + d1))));
  append_hadamards(prep2, 1, n1, {on0(0)});
  append_cycle_pair(prep2, n - n2, n2, {on1(0)});

  Circuit t1 = member_shift(n, n + 1, n1, n1, {on0(0), on0(n)});
  Circuit t2 = member_shift(n, 2 * n - n2, n2, n2, {on1(0), on1(n)});

  const std::vector<SubsetCircuits> parts = {{t1, prep1}, {t2, prep2}};
  return synth_partitioned(p, z, parts);
}

Circuit synth_wheel(int m, bool directed, double alpha) {
  if (m < 2 || m > 20) throw InvalidInput("wheel synthesis needs m >= 2");
  const std::size_t outer = std::size_t{1} << m;
  const int n = m + 1;
  const TransitionMatrix p = google_matrix(wheel_graph(outer, directed), alpha);
  const double big_n = static_cast<double>(outer);
  const double beta = (1.0 - alpha) / (big_n + 1.0);
  const double gamma = alpha / 3.0 + beta;

  Partition z;
  z.subsets = {index_range(0, outer), {outer}};
  z.references = {0, outer};
  z.basis = {0, 0};

  // Column 0 carries gamma on 1, N-1 and the hub, beta elsewhere. Both halves
  // of the rim are built with the peak on their last entry, then the lower
  // half's peak is moved to entry 1.
  Circuit prep1(n);
  prep1.append(Gate::ry(0, angle_from_cos2(1.0 - gamma)));
  prep1.append(Gate::ry(1, std::numbers::pi / 4.0, {on0(0)}));
  for (int i = 2; i <= m; ++i) {
    std::vector<Control> path = {on0(0)};
    for (int q = 2; q < i; ++q) path.push_back(on1(q));
    const double zero_mass = std::ldexp(beta, m - i);
    const double whole = (std::ldexp(1.0, m - i + 1) - 1.0) * beta + gamma;
    prep1.append(Gate::ry(i, angle_from_cos2(zero_mass / whole), path));
    std::vector<Control> flat = path;
    flat.push_back(on0(i));
    append_hadamards(prep1, i + 1, m - i, flat);
  }
  for (int q = 2; q < m; ++q) prep1.append(Gate::x(q, {on0(0), on0(1)}));

  Circuit prep2(n);
  const double hub_rim_mass = directed ? big_n / (big_n + 1.0) : 1.0 - beta;
  prep2.append(Gate::ry(0, angle_from_cos2(hub_rim_mass)));
  append_hadamards(prep2, 1, m, {on0(0)});

  Circuit t1 = member_shift(n, n + 1, m, m, {on0(0), on0(n)});

  const std::vector<SubsetCircuits> parts = {{t1, prep1}, {Circuit(2 * n), prep2}};
  return synth_partitioned(p, z, parts);
}

Circuit synth_directed8(double alpha) {
  const TransitionMatrix p = google_matrix(directed_example8(), alpha);
  const double beta = (1.0 - alpha) / 8.0;
  const double g1 = alpha + beta;
  const double g2 = alpha / 2.0 + beta;
  const double g3 = alpha / 4.0 + beta;
  constexpr int n = 3;

  Partition z;
  z.subsets = {{0, 1, 2, 3}, {4, 5}, {6, 7}};
  z.references = {0, 4, 6};
  z.basis = {0, 0, 0};

  // Column 0: peak on row 1.
  Circuit prep1(n);
  prep1.append(Gate::ry(0, angle_from_cos2((3 * beta + g1) / (7 * beta + g1))));
  prep1.append(Gate::h(1, {on1(0)}));
  prep1.append(Gate::h(2, {on1(0)}));
  prep1.append(Gate::ry(1, angle_from_cos2((beta + g1) / (3 * beta + g1)), {on0(0)}));
  prep1.append(Gate::h(2, {on0(0), on1(1)}));
  prep1.append(Gate::ry(2, angle_from_cos2(beta / (beta + g1)), {on0(0), on0(1)}));

  // Column 4: peaks on rows 0 and 1.
  Circuit prep2(n);
  prep2.append(Gate::ry(0, angle_from_cos2((beta + g2) / (3 * beta + g2))));
  prep2.append(Gate::ry(1, angle_from_cos2(g2 / (beta + g2)), {on0(0)}));
  prep2.append(Gate::h(1, {on1(0)}));
  prep2.append(Gate::h(2));

  // Column 6: peaks on rows 4..7.
  Circuit prep3(n);
  prep3.append(Gate::ry(0, angle_from_cos2(beta / (beta + g3))));
  prep3.append(Gate::h(1));
  prep3.append(Gate::h(2));

  // The 4-cycle only rotates rows 0..3; the rest of the column is flat.
  Circuit t1 = member_shift(n, 4, 2, 2, {on0(0), on0(3)});
  Circuit t2(2 * n);
  const std::vector<Control> at5 = {on1(0), on0(1), on1(2)};
  append_shift(t2, qubit_range(n, n), 2, ShiftDirection::Left, at5);

  const std::vector<SubsetCircuits> parts = {{t1, prep1}, {t2, prep2}, {Circuit(2 * n), prep3}};
  return synth_partitioned(p, z, parts);
}

}  // namespace szegedy
