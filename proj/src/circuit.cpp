#include "resbench/circuit.hpp"

namespace resbench {

bool is_single_qubit(GateKind k) {
  switch (k) {
    case GateKind::H:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::RXp:
    case GateKind::RXm:
    case GateKind::RZp:
    case GateKind::RZm:
      return true;
    default:
      return false;
  }
}

bool is_unitary(GateKind k) {
  return k != GateKind::Barrier && k != GateKind::Measure;
}

const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::RXp: return "rx+";
    case GateKind::RXm: return "rx-";
    case GateKind::RZp: return "rz+";
    case GateKind::RZm: return "rz-";
    case GateKind::CNOT: return "cx";
    case GateKind::SWAP: return "swap";
    case GateKind::Barrier: return "barrier";
    case GateKind::Measure: return "measure";
  }
  return "?";
}

void Circuit::add(Gate g) {
  auto check = [this](int q) {
    if (q < 0 || q >= width) {
      throw VertexOutOfRange("gate qubit " + std::to_string(q) + " out of range for width " +
                             std::to_string(width));
    }
  };
  switch (g.kind) {
    case GateKind::Barrier:
      break;
    case GateKind::CNOT:
    case GateKind::SWAP:
      check(g.q0);
      check(g.q1);
      if (g.q0 == g.q1) {
        throw ConfigError("two-qubit gate with equal qubits");
      }
      break;
    case GateKind::Measure:
      check(g.q0);
      if (g.cbit < 0 || g.cbit >= width) {
        throw VertexOutOfRange("classical bit out of range");
      }
      break;
    default:
      check(g.q0);
      break;
  }
  gates.push_back(g);
}

int Circuit::count_cnots() const {
  int total = 0;
  for (const Gate& g : gates) {
    if (g.kind == GateKind::CNOT) {
      total += 1;
    } else if (g.kind == GateKind::SWAP) {
      total += 3;
    }
  }
  return total;
}

bool Circuit::measures_all() const {
  std::vector<int> seen(width, 0);
  for (const Gate& g : gates) {
    if (g.kind == GateKind::Measure) {
      seen[g.q0] += 1;
    }
  }
  for (int c : seen) {
    if (c != 1) {
      return false;
    }
  }
  return true;
}

std::string Circuit::dump() const {
  std::string out;
  for (const Gate& g : gates) {
    out += gate_name(g.kind);
    switch (g.kind) {
      case GateKind::Barrier:
        break;
      case GateKind::CNOT:
      case GateKind::SWAP:
        out += " " + std::to_string(g.q0) + " " + std::to_string(g.q1);
        break;
      case GateKind::Measure:
        out += " " + std::to_string(g.q0) + " -> " + std::to_string(g.cbit);
        break;
      default:
        out += " " + std::to_string(g.q0);
        break;
    }
    out += "\n";
  }
  return out;
}

}  // namespace resbench
