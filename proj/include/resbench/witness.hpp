#pragma once

#include <vector>

#include "resbench/circuit.hpp"
#include "resbench/graph.hpp"
#include "resbench/pauli.hpp"

namespace resbench {

// Graph-state generators: g_k has X at vertex k, Z at each neighbor of k and
// identity elsewhere, phase +1.
std::vector<PauliString> generators(const Graph& g);

// The n generators plus the all-identity string; the identity entry maps to a
// plain computational-basis measurement and is excluded from witness sums.
std::vector<PauliString> stabilizer_set(const Graph& g);

// Conjugate each generator through the local Clifford of every LC step,
// tracking the evolving graph to resolve neighborhoods per step. Signs are
// exact: the outputs stabilize the append-only circuit's state as returned.
std::vector<PauliString> transform_generators(const std::vector<PauliString>& gens,
                                              const Graph& base, const LcSequence& seq);

// Pre-measurement rotations, on logical indices: X -> H, Y -> Sdg then H,
// Z and I -> nothing.
std::vector<Gate> measurement_basis(const PauliString& p);

// (n - 1) - sum of the n generator expectations. Negative certifies genuine
// multipartite entanglement.
double genuine_witness(const std::vector<double>& expectations, int n);

// 1 - <g_i> - <g_j> for an edge (i, j) of the prepared graph; other pairs are
// rejected with NotAnEdge.
double biseparable_witness(const Graph& g, int i, int j, double ei, double ej);

}  // namespace resbench
