#pragma once

#include "resbench/circuit.hpp"
#include "resbench/graph.hpp"
#include "resbench/pauli.hpp"
#include "resbench/topology.hpp"

namespace resbench {

// State-prep circuit for |g>: H on every qubit, then H(j)-CNOT(i,j)-H(j) per
// edge in (min, max) lexicographic order (the CZ decomposition). A barrier
// separates the H layer from the entangling block. Not yet measured.
Circuit build_graph_state_circuit(const Graph& g);

// Rebuild-from-scratch construction: apply the LC sequence to the induced
// graph, construct the transformed graph's circuit and route every CNOT whose
// endpoints are not native couplers. Measured stabilizers are the transformed
// graph's generators.
Circuit build_naive_circuit(const HardwareTopology& topo, const std::vector<int>& qubits,
                            const LcSequence& seq);

// Append-only construction: the induced graph's circuit followed by one
// single-qubit block per LC step (exp(-i pi/4 X) on the vertex, exp(+i pi/4 Z)
// on each current neighbor), each block fenced by barriers. Adds no CNOTs.
Circuit build_unitary_circuit(const HardwareTopology& topo, const std::vector<int>& qubits,
                              const LcSequence& seq);

// prep + barrier + basis rotations for p (through the routed layout) +
// MEASURE of every logical qubit into its own classical bit.
Circuit with_stabilizer_measurement(Circuit prep, const PauliString& p);

}  // namespace resbench
