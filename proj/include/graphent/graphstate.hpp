// Copyright 2026 The graphent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRAPHENT_GRAPHSTATE_HPP_
#define GRAPHENT_GRAPHSTATE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "graphent/graph.hpp"
#include "graphent/statevector.hpp"

namespace graphent {

// Tensor product of the per-qubit initial states: each qubit gets
// ry(theta) then rz(alpha) on |0>. The rz convention drops a global
// phase of e^{-i alpha/2} per qubit relative to writing the state as
// cos(theta/2)|0> + e^{i alpha} sin(theta/2)|1>; nothing downstream
// observes it.
StateVector prepare_initial(const GraphStateSpec& spec);

// prepare_initial followed by one controlled-phase gate per edge. The
// diagonal edge gates commute, so edge order cannot change the result.
StateVector build_graph_state(const GraphStateSpec& spec);

enum class GateKind { RY, RZ, CP };

struct GateRecord {
  GateKind kind = GateKind::RY;
  std::vector<std::size_t> qubits;
  double angle = 0.0;

  friend bool operator==(const GateRecord&, const GateRecord&) = default;
};

struct CircuitDescription {
  std::size_t n_qubits = 0;
  std::vector<GateRecord> gates;

  friend bool operator==(const CircuitDescription&,
                         const CircuitDescription&) = default;
};

// Gate list that prepares the state from |00...0>: per qubit ascending,
// ry(theta) then rz(alpha), then one cp per edge in canonical order.
// Gates whose angle is exactly 0 are elided.
CircuitDescription circuit_description(const GraphStateSpec& spec);

// Runs a recorded circuit on |00...0>.
StateVector replay_circuit(const CircuitDescription& circuit);

// {"n": 2, "gates": [{"kind": "RY", "q": [0], "angle": ...}, ...]}
std::string circuit_to_json(const CircuitDescription& circuit);

}  // namespace graphent

#endif  // GRAPHENT_GRAPHSTATE_HPP_
