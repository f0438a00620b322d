#include "szegedy/circuit_io.hpp"

#include <charconv>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "szegedy/errors.hpp"
#include "szegedy/number_format.hpp"

namespace szegedy {

namespace {

const char* mnemonic(GateKind kind) {
  switch (kind) {
    case GateKind::PauliX: return "X";
    case GateKind::Hadamard: return "H";
    case GateKind::RyRotation: return "RY";
    case GateKind::PhaseFlip: return "PI";
    case GateKind::PrimedPhaseFlip: return "PIP";
    case GateKind::Swap: return "SWAP";
    case GateKind::GlobalPhase: return "GPHASE";
  }
  return "?";
}

[[noreturn]] void fail(std::size_t line_no, const std::string& why) {
  throw InvalidInput("circuit text line " + std::to_string(line_no) + ": " + why);
}

int parse_int(std::string_view token, std::size_t line_no) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(line_no, "expected integer, got '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

Gate parse_gate(const std::vector<std::string_view>& tokens, std::size_t line_no) {
  const std::string_view name = tokens[0];
  std::size_t next = 1;
  const auto operand = [&]() {
    if (next >= tokens.size()) fail(line_no, "missing operand");
    return parse_int(tokens[next++], line_no);
  };

  Gate gate;
  if (name == "GPHASE") {
    const std::string_view s = next < tokens.size() ? tokens[next++] : "";
    if (s == "-1") {
      gate = Gate::global_phase(-1);
    } else if (s == "+1" || s == "1") {
      gate = Gate::global_phase(1);
    } else {
      fail(line_no, "GPHASE expects -1 or +1");
    }
  } else if (name == "SWAP") {
    const int a = operand();
    const int b = operand();
    gate = Gate::swap(a, b);
  } else if (name == "X") {
    gate = Gate::x(operand());
  } else if (name == "H") {
    gate = Gate::h(operand());
  } else if (name == "RY") {
    gate = Gate::ry(operand(), 0.0);
  } else if (name == "PI") {
    gate = Gate::phase_flip(operand());
  } else if (name == "PIP") {
    gate = Gate::primed_phase_flip(operand());
  } else {
    fail(line_no, "unknown gate '" + std::string(name) + "'");
  }

  bool have_angle = false;
  for (; next < tokens.size(); ++next) {
    const std::string_view tok = tokens[next];
    if (tok.size() >= 3 && tok.front() == '@') {
      const char pol = tok.back();
      if (pol != '+' && pol != '-') fail(line_no, "control must end in + or -");
      const int q = parse_int(tok.substr(1, tok.size() - 2), line_no);
      gate.controls.push_back({q, pol == '+' ? Polarity::One : Polarity::Zero});
    } else if (tok.rfind("angle=", 0) == 0) {
      if (gate.kind != GateKind::RyRotation) {
        fail(line_no, "only RY takes an angle");
      }
      const std::string_view value = tok.substr(6);
      const auto [ptr, ec] =
          std::from_chars(value.data(), value.data() + value.size(), gate.angle);
      if (ec != std::errc() || ptr != value.data() + value.size()) {
        fail(line_no, "bad angle '" + std::string(value) + "'");
      }
      have_angle = true;
    } else {
      fail(line_no, "unexpected token '" + std::string(tok) + "'");
    }
  }
  if (gate.kind == GateKind::RyRotation && !have_angle) {
    fail(line_no, "RY requires angle=<radians>");
  }
  return gate;
}

}  // namespace

void write_text(const Circuit& c, std::ostream& out) {
  out << kCircuitHeader << '\n' << "width " << c.width() << '\n';
  for (const Gate& gate : c.gates()) {
    out << mnemonic(gate.kind);
    if (gate.kind == GateKind::GlobalPhase) {
      out << ' ' << (gate.sign < 0 ? "-1" : "+1") << '\n';
      continue;
    }
    out << ' ' << gate.target;
    if (gate.kind == GateKind::Swap) out << ' ' << gate.other;
    for (const Control& ctrl : gate.controls) {
      out << " @" << ctrl.qubit << (ctrl.polarity == Polarity::One ? '+' : '-');
    }
    if (gate.kind == GateKind::RyRotation) {
      out << " angle=" << format_double(gate.angle);
    }
    out << '\n';
  }
}

std::string to_text(const Circuit& c) {
  std::ostringstream out;
  write_text(c, out);
  return out.str();
}

Circuit parse_circuit(std::string_view text) {
  std::optional<Circuit> circuit;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tokens = split(line);
    if (tokens.empty()) continue;
    if (!have_header) {
      if (line.substr(0, kCircuitHeader.size()) != kCircuitHeader) {
        fail(line_no, "expected '" + std::string(kCircuitHeader) + "'");
      }
      have_header = true;
      continue;
    }
    if (tokens[0].front() == '#') continue;
    if (tokens[0] == "width") {
      if (circuit) fail(line_no, "duplicate width directive");
      if (tokens.size() != 2) fail(line_no, "width takes one integer");
      circuit.emplace(parse_int(tokens[1], line_no));
      continue;
    }
    if (!circuit) fail(line_no, "gate before width directive");
    try {
      circuit->append(parse_gate(tokens, line_no));
    } catch (const InvalidInput& e) {
      const std::string what = e.what();
      if (what.rfind("circuit text line", 0) == 0) throw;
      fail(line_no, what);
    }
  }
  if (!circuit) throw InvalidInput("circuit text has no width directive");
  return *std::move(circuit);
}

std::string to_qasm(const Circuit& c) {
  std::ostringstream out;
  out << "OPENQASM 3.0;\n"
      << "include \"stdgates.inc\";\n"
      << "// exported from " << kCircuitHeader.substr(2) << '\n';
  if (c.width() > 0) out << "qubit[" << c.width() << "] q;\n";
  for (const Gate& gate : c.gates()) {
    if (gate.kind == GateKind::GlobalPhase) {
      if (gate.sign < 0) out << "gphase(pi);\n";
      continue;
    }
    std::ostringstream mods;
    std::ostringstream args;
    for (const Control& ctrl : gate.controls) {
      mods << (ctrl.polarity == Polarity::One ? "ctrl @ " : "negctrl @ ");
      args << "q[" << ctrl.qubit << "], ";
    }
    args << "q[" << gate.target << "]";
    if (gate.kind == GateKind::Swap) args << ", q[" << gate.other << "]";
    const std::string prefix = mods.str();
    const std::string operands = args.str();
    switch (gate.kind) {
      case GateKind::PauliX:
        out << prefix << "x " << operands << ";\n";
        break;
      case GateKind::Hadamard:
        out << prefix << "h " << operands << ";\n";
        break;
      case GateKind::RyRotation:
        out << prefix << "ry(" << format_double(2.0 * gate.angle) << ") "
            << operands << ";\n";
        break;
      case GateKind::PhaseFlip:
        out << prefix << "z " << operands << ";\n";
        break;
      case GateKind::PrimedPhaseFlip:
        out << "x q[" << gate.target << "];\n"
            << prefix << "z " << operands << ";\n"
            << "x q[" << gate.target << "];\n";
        break;
      case GateKind::Swap:
        out << prefix << "swap " << operands << ";\n";
        break;
      case GateKind::GlobalPhase:
        break;
    }
  }
  return out.str();
}

}  // namespace szegedy
