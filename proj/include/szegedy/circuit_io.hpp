#pragma once

// Textual circuit format, one gate per line:
//
//   # szegedy-circuit v1
//   width 4
//   H 0
//   X 3 @0+ @1-
//   RY 2 @0+ angle=0.6154797086703873
//   PI 3          (PhaseFlip)
//   PIP 3 @2+     (PrimedPhaseFlip)
//   SWAP 0 2
//   GPHASE -1
//
// `@q+` is a control on |1> of qubit q, `@q-` a control on |0>. Angles are
// printed in shortest round-trip form, so print(parse(text)) == text for any
// text produced by print.

#include <iosfwd>
#include <string>
#include <string_view>

#include "szegedy/circuit.hpp"

namespace szegedy {

inline constexpr std::string_view kCircuitHeader = "# szegedy-circuit v1";

std::string to_text(const Circuit& c);
void write_text(const Circuit& c, std::ostream& out);

/// Throws InvalidInput with the offending line number on malformed input.
Circuit parse_circuit(std::string_view text);

/// OpenQASM 3 flavoured export (`ctrl @` / `negctrl @` modifiers). Our
/// RY(t) is emitted as ry(2t); PIP becomes x; z; x.
std::string to_qasm(const Circuit& c);

}  // namespace szegedy
