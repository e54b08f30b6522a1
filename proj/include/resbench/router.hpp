#pragma once

#include "resbench/circuit.hpp"
#include "resbench/topology.hpp"

namespace resbench {

// Insert SWAPs before each CNOT whose endpoints sit on non-adjacent hardware
// qubits, moving the control along a shortest coupler path inside the mapped
// subset (ties broken toward the lowest hardware index). Moves persist: there
// is no swap-back, and meta.layout records the final logical -> wire map.
// Gate qubits in `circ` are logical vertices; the result acts on wires whose
// hardware assignment is hardware_map.
Circuit route_cnots(const HardwareTopology& topo, const Circuit& circ,
                    const std::vector<int>& hardware_map);

}  // namespace resbench
