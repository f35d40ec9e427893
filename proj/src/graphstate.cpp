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

#include "graphent/graphstate.hpp"

#include <stdexcept>

#include "json.hpp"

namespace graphent {

namespace {

const char* gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::RY:
      return "RY";
    case GateKind::RZ:
      return "RZ";
    case GateKind::CP:
      return "CP";
  }
  throw std::logic_error("unreachable gate kind");
}

}  // namespace

StateVector prepare_initial(const GraphStateSpec& spec) {
  StateVector sv = StateVector::zero(spec.n_qubits());
  for (std::size_t q = 0; q < spec.n_qubits(); ++q) {
    sv.apply_ry(q, spec.inits()[q].theta());
    sv.apply_rz(q, spec.inits()[q].alpha());
  }
  return sv;
}

StateVector build_graph_state(const GraphStateSpec& spec) {
  StateVector sv = prepare_initial(spec);
  for (const Edge& e : spec.graph().edges()) {
    sv.apply_cp(e.i, e.j, e.phi);
  }
  return sv;
}

CircuitDescription circuit_description(const GraphStateSpec& spec) {
  CircuitDescription circuit;
  circuit.n_qubits = spec.n_qubits();
  for (std::size_t q = 0; q < spec.n_qubits(); ++q) {
    const QubitInit& init = spec.inits()[q];
    if (init.theta() != 0.0) {
      circuit.gates.push_back(GateRecord{GateKind::RY, {q}, init.theta()});
    }
    if (init.alpha() != 0.0) {
      circuit.gates.push_back(GateRecord{GateKind::RZ, {q}, init.alpha()});
    }
  }
  for (const Edge& e : spec.graph().edges()) {
    if (e.phi != 0.0) {
      circuit.gates.push_back(GateRecord{GateKind::CP, {e.i, e.j}, e.phi});
    }
  }
  return circuit;
}

StateVector replay_circuit(const CircuitDescription& circuit) {
  StateVector sv = StateVector::zero(circuit.n_qubits);
  for (const GateRecord& gate : circuit.gates) {
    switch (gate.kind) {
      case GateKind::RY:
        if (gate.qubits.size() != 1) {
          throw std::invalid_argument("RY takes one qubit");
        }
        sv.apply_ry(gate.qubits[0], gate.angle);
        break;
      case GateKind::RZ:
        if (gate.qubits.size() != 1) {
          throw std::invalid_argument("RZ takes one qubit");
        }
        sv.apply_rz(gate.qubits[0], gate.angle);
        break;
      case GateKind::CP:
        if (gate.qubits.size() != 2) {
          throw std::invalid_argument("CP takes two qubits");
        }
        sv.apply_cp(gate.qubits[0], gate.qubits[1], gate.angle);
        break;
    }
  }
  return sv;
}

std::string circuit_to_json(const CircuitDescription& circuit) {
  nlohmann::json gates = nlohmann::json::array();
  for (const GateRecord& gate : circuit.gates) {
    gates.push_back({{"kind", gate_name(gate.kind)},
                     {"q", gate.qubits},
                     {"angle", gate.angle}});
  }
  nlohmann::json root;
  root["n"] = circuit.n_qubits;
  root["gates"] = std::move(gates);
  return root.dump(2) + "\n";
}

}  // namespace graphent
