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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "json.hpp"

#include "graphent/graphstate.hpp"
#include "test_util.hpp"

using namespace graphent;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTol = 1e-12;
}  // namespace

TEST_CASE("prepare_initial puts each qubit at its spherical angles") {
  // All thetas zero: still |00...0> regardless of alpha.
  GraphStateSpec zeros(WeightedGraph(3, {}),
                       {QubitInit(1.0, 0.0), QubitInit(2.0, 0.0),
                        QubitInit(3.0, 0.0)});
  StateVector sv = prepare_initial(zeros);
  CHECK(std::abs(sv.amplitude(0)) == doctest::Approx(1.0).epsilon(1e-15));

  // Single qubit at theta = pi/2, alpha = 0 is |+> up to global phase.
  GraphStateSpec plus(WeightedGraph(1, {}), {QubitInit(0.0, kPi / 2.0)});
  sv = prepare_initial(plus);
  const double r = std::numbers::sqrt2 / 2.0;
  CHECK(std::abs(sv.amplitude(0) - complex_t(r)) < kTol);
  CHECK(std::abs(sv.amplitude(1) - complex_t(r)) < kTol);

  // Generic angles show up in the Bloch vector.
  const double theta = kPi / 3.0;
  const double alpha = kPi / 4.0;
  GraphStateSpec generic(WeightedGraph(2, {}),
                         {QubitInit(alpha, theta), QubitInit(0.0, 0.0)});
  const BlochVector b = prepare_initial(generic).bloch_vector(0);
  CHECK(std::abs(b.x - std::sin(theta) * std::cos(alpha)) < kTol);
  CHECK(std::abs(b.y - std::sin(theta) * std::sin(alpha)) < kTol);
  CHECK(std::abs(b.z - std::cos(theta)) < kTol);
}

TEST_CASE("build_graph_state on the maximally entangling two-qubit spec") {
  // Both qubits through ry(pi/2), one cp(pi) edge: amplitudes are
  // (1, 1, 1, -1)/2.
  GraphStateSpec spec(WeightedGraph(2, {Edge{0, 1, kPi}}),
                      {QubitInit(0.0, kPi / 2.0), QubitInit(0.0, kPi / 2.0)});
  const StateVector sv = build_graph_state(spec);
  CHECK(std::abs(sv.amplitude(0) - complex_t(0.5)) < kTol);
  CHECK(std::abs(sv.amplitude(1) - complex_t(0.5)) < kTol);
  CHECK(std::abs(sv.amplitude(2) - complex_t(0.5)) < kTol);
  CHECK(std::abs(sv.amplitude(3) - complex_t(-0.5)) < kTol);
}

TEST_CASE("no edges means the initial product state, bit for bit") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    GraphStateSpec spec = testutil::random_spec(rng, 1, 5);
    GraphStateSpec stripped(WeightedGraph(spec.n_qubits(), {}), spec.inits());
    const StateVector a = prepare_initial(stripped);
    const StateVector b = build_graph_state(stripped);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      CHECK(a.amplitude(i) == b.amplitude(i));
    }
    // And every qubit of a product state sits on the sphere.
    for (std::size_t q = 0; q < b.n_qubits(); ++q) {
      CHECK(std::abs(b.bloch_vector(q).magnitude() - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("all-zero edge weights leave every qubit separable") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 5; ++trial) {
    GraphStateSpec spec = testutil::random_spec(rng, 2, 5);
    std::vector<Edge> flat;
    for (const Edge& e : spec.graph().edges()) {
      flat.push_back(Edge{e.i, e.j, 0.0});
    }
    GraphStateSpec zero_weights(WeightedGraph(spec.n_qubits(), flat),
                                spec.inits());
    const StateVector sv = build_graph_state(zero_weights);
    for (std::size_t q = 0; q < sv.n_qubits(); ++q) {
      CHECK(std::abs(sv.bloch_vector(q).magnitude() - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("edge list order cannot change the state") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 10; ++trial) {
    const GraphStateSpec spec = testutil::random_spec(rng, 3, 6);
    if (spec.graph().edges().empty()) {
      continue;
    }
    // Apply the edge gates manually in two shuffled orders.
    std::vector<Edge> order_a = spec.graph().edges();
    std::vector<Edge> order_b = order_a;
    std::shuffle(order_b.begin(), order_b.end(), rng);
    StateVector a = prepare_initial(spec);
    StateVector b = prepare_initial(spec);
    for (const Edge& e : order_a) {
      a.apply_cp(e.i, e.j, e.phi);
    }
    for (const Edge& e : order_b) {
      b.apply_cp(e.i, e.j, e.phi);
    }
    for (std::size_t i = 0; i < a.dim(); ++i) {
      CHECK(std::abs(a.amplitude(i) - b.amplitude(i)) < kTol);
    }
  }
}

TEST_CASE("alphas only rephase the computational amplitudes") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 5; ++trial) {
    const GraphStateSpec spec = testutil::random_spec(rng, 2, 5);
    std::vector<QubitInit> rephased;
    for (const QubitInit& q : spec.inits()) {
      rephased.emplace_back(testutil::uniform(rng, 0.0, 2.0 * kPi),
                            q.theta());
    }
    const StateVector a = build_graph_state(spec);
    const StateVector b = build_graph_state(
        GraphStateSpec(spec.graph(), std::move(rephased)));
    for (std::size_t i = 0; i < a.dim(); ++i) {
      CHECK(std::abs(std::abs(a.amplitude(i)) - std::abs(b.amplitude(i))) <
            kTol);
    }
  }
}

TEST_CASE("circuit description lists ry, rz, then cp in canonical order") {
  GraphStateSpec spec(
      WeightedGraph(3, {Edge{1, 2, kPi / 2.0}, Edge{0, 1, kPi}}),
      {QubitInit(0.0, kPi / 2.0), QubitInit(1.5, kPi / 3.0),
       QubitInit(0.0, 0.0)});
  const CircuitDescription circuit = circuit_description(spec);
  CHECK(circuit.n_qubits == 3);
  REQUIRE(circuit.gates.size() == 5);
  CHECK(circuit.gates[0] ==
        GateRecord{GateKind::RY, {0}, kPi / 2.0});
  CHECK(circuit.gates[1] == GateRecord{GateKind::RY, {1}, kPi / 3.0});
  CHECK(circuit.gates[2] == GateRecord{GateKind::RZ, {1}, 1.5});
  CHECK(circuit.gates[3] == GateRecord{GateKind::CP, {0, 1}, kPi});
  CHECK(circuit.gates[4] ==
        GateRecord{GateKind::CP, {1, 2}, kPi / 2.0});

  // Qubit 2 is identity: no gates at all for it. All-default spec gives
  // an empty gate list.
  GraphStateSpec trivial(WeightedGraph(2, {Edge{0, 1, 0.0}}),
                         {QubitInit(0.0, 0.0), QubitInit(0.0, 0.0)});
  CHECK(circuit_description(trivial).gates.empty());
}

TEST_CASE("replaying the circuit reproduces the state up to global phase") {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 10; ++trial) {
    const GraphStateSpec spec = testutil::random_spec(rng, 1, 6);
    const StateVector direct = build_graph_state(spec);
    const StateVector replayed = replay_circuit(circuit_description(spec));
    CHECK(testutil::max_amp_diff_up_to_phase(direct, replayed) < kTol);
  }
}

TEST_CASE("circuit json has the documented shape") {
  GraphStateSpec spec(WeightedGraph(2, {Edge{0, 1, kPi}}),
                      {QubitInit(0.0, kPi / 2.0), QubitInit(0.0, kPi / 2.0)});
  const nlohmann::json j =
      nlohmann::json::parse(circuit_to_json(circuit_description(spec)));
  CHECK(j.at("n") == 2);
  REQUIRE(j.at("gates").size() == 3);
  CHECK(j["gates"][0]["kind"] == "RY");
  CHECK(j["gates"][0]["q"] == nlohmann::json::array({0}));
  CHECK(j["gates"][0]["angle"].get<double>() ==
        doctest::Approx(kPi / 2.0).epsilon(1e-15));
  CHECK(j["gates"][2]["kind"] == "CP");
  CHECK(j["gates"][2]["q"] == nlohmann::json::array({0, 1}));
  CHECK(j["gates"][2]["angle"].get<double>() ==
        doctest::Approx(kPi).epsilon(1e-15));
}
