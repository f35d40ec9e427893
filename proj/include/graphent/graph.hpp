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

#ifndef GRAPHENT_GRAPH_HPP_
#define GRAPHENT_GRAPH_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace graphent {

// Maps any finite angle into [0, 2*pi). Values already in range pass
// through unchanged, so wrapping is idempotent.
double wrap_angle(double radians);

// Undirected edge with a controlled-phase weight. Canonical form keeps
// i < j; the weight lives in [0, 2*pi).
struct Edge {
  std::size_t i = 0;
  std::size_t j = 0;
  double phi = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple undirected weighted graph on vertices 0..n-1. The constructor
// canonicalizes edge endpoints, wraps weights, sorts edges by (i, j) and
// rejects self-loops, duplicate pairs and out-of-range endpoints.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(std::size_t n_vertices, std::vector<Edge> edges);

  std::size_t n_vertices() const { return n_vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Vertices adjacent to l, in ascending order.
  std::vector<std::size_t> neighborhood(std::size_t l) const;

  // Sum of weights over edges incident to l.
  double weighted_degree(std::size_t l) const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  std::size_t n_vertices_ = 1;
  std::vector<Edge> edges_;
};

// Initial single-qubit state cos(theta/2)|0> + e^{i alpha} sin(theta/2)|1>.
// alpha is wrapped into [0, 2*pi); theta outside [0, pi] is an error, not
// something we silently clamp.
class QubitInit {
 public:
  QubitInit() = default;
  QubitInit(double alpha, double theta);

  double alpha() const { return alpha_; }
  double theta() const { return theta_; }

  friend bool operator==(const QubitInit&, const QubitInit&) = default;

 private:
  double alpha_ = 0.0;
  double theta_ = 0.0;
};

// Everything needed to build one weighted graph state: the interaction
// graph plus one (alpha, theta) pair per vertex.
class GraphStateSpec {
 public:
  GraphStateSpec();
  GraphStateSpec(WeightedGraph graph, std::vector<QubitInit> inits);

  const WeightedGraph& graph() const { return graph_; }
  const std::vector<QubitInit>& inits() const { return inits_; }
  std::size_t n_qubits() const { return graph_.n_vertices(); }

  friend bool operator==(const GraphStateSpec&, const GraphStateSpec&) = default;

 private:
  WeightedGraph graph_;
  std::vector<QubitInit> inits_;
};

// Parses the JSON wire format:
//
//   {"n": 2,
//    "qubits": [{"alpha": 0.0, "theta": 1.5707963267948966}, ...],
//    "edges":  [{"i": 0, "j": 1, "phi": 3.141592653589793}, ...]}
//
// Angles are radians. Unknown keys anywhere are rejected so that typos
// like "aplha" fail loudly instead of silently defaulting.
GraphStateSpec parse_spec(const std::string& text);

// Inverse of parse_spec up to angle wrapping; parse(serialize(s)) == s.
std::string serialize_spec(const GraphStateSpec& spec);

}  // namespace graphent

#endif  // GRAPHENT_GRAPH_HPP_
