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

#include "graphent/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace graphent {

namespace {

using nlohmann::json;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_keys(const json& obj, const char* what,
                  std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* k) {
          return item.key() == k;
        }) == allowed.end()) {
      throw std::invalid_argument(std::string("unknown key \"") + item.key() +
                                  "\" in " + what);
    }
  }
  for (const char* k : allowed) {
    if (!obj.contains(k)) {
      throw std::invalid_argument(std::string("missing key \"") + k +
                                  "\" in " + what);
    }
  }
}

double get_angle(const json& obj, const char* key, const char* what) {
  const json& v = obj.at(key);
  if (!v.is_number()) {
    throw std::invalid_argument(std::string("\"") + key + "\" in " + what +
                                " must be a number");
  }
  const double angle = v.get<double>();
  if (!std::isfinite(angle)) {
    throw std::invalid_argument(std::string("\"") + key + "\" in " + what +
                                " must be finite");
  }
  return angle;
}

std::size_t get_index(const json& obj, const char* key, const char* what) {
  const json& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw std::invalid_argument(std::string("\"") + key + "\" in " + what +
                                " must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

double wrap_angle(double radians) {
  if (!std::isfinite(radians)) {
    throw std::invalid_argument("angle must be finite");
  }
  if (radians >= 0.0 && radians < kTwoPi) {
    return radians;
  }
  double wrapped = std::fmod(radians, kTwoPi);
  if (wrapped < 0.0) {
    wrapped += kTwoPi;
  }
  // fmod can land exactly on 2*pi after the negative correction.
  if (wrapped >= kTwoPi) {
    wrapped = 0.0;
  }
  return wrapped;
}

WeightedGraph::WeightedGraph(std::size_t n_vertices, std::vector<Edge> edges)
    : n_vertices_(n_vertices), edges_(std::move(edges)) {
  if (n_vertices_ < 1) {
    throw std::invalid_argument("graph needs at least one vertex");
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (Edge& e : edges_) {
    if (e.i == e.j) {
      throw std::invalid_argument("self-loop on vertex " +
                                  std::to_string(e.i));
    }
    if (e.i >= n_vertices_ || e.j >= n_vertices_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.i > e.j) {
      std::swap(e.i, e.j);
    }
    if (!seen.insert({e.i, e.j}).second) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(e.i) +
                                  ", " + std::to_string(e.j) + ")");
    }
    e.phi = wrap_angle(e.phi);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  });
}

std::vector<std::size_t> WeightedGraph::neighborhood(std::size_t l) const {
  if (l >= n_vertices_) {
    throw std::out_of_range("vertex index out of range");
  }
  std::vector<std::size_t> out;
  for (const Edge& e : edges_) {
    if (e.i == l) {
      out.push_back(e.j);
    } else if (e.j == l) {
      out.push_back(e.i);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

double WeightedGraph::weighted_degree(std::size_t l) const {
  if (l >= n_vertices_) {
    throw std::out_of_range("vertex index out of range");
  }
  double sum = 0.0;
  for (const Edge& e : edges_) {
    if (e.i == l || e.j == l) {
      sum += e.phi;
    }
  }
  return sum;
}

QubitInit::QubitInit(double alpha, double theta)
    : alpha_(wrap_angle(alpha)), theta_(theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::invalid_argument("theta must lie in [0, pi]");
  }
}

GraphStateSpec::GraphStateSpec() : inits_(1) {}

GraphStateSpec::GraphStateSpec(WeightedGraph graph,
                               std::vector<QubitInit> inits)
    : graph_(std::move(graph)), inits_(std::move(inits)) {
  if (inits_.size() != graph_.n_vertices()) {
    throw std::invalid_argument("need exactly one qubit init per vertex");
  }
}

GraphStateSpec parse_spec(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("spec is not valid JSON: ") +
                                e.what());
  }
  if (!root.is_object()) {
    throw std::invalid_argument("spec must be a JSON object");
  }
  require_keys(root, "spec", {"n", "qubits", "edges"});

  const std::size_t n = get_index(root, "n", "spec");
  if (n < 1) {
    throw std::invalid_argument("\"n\" must be at least 1");
  }

  const json& qubits = root.at("qubits");
  if (!qubits.is_array() || qubits.size() != n) {
    throw std::invalid_argument("\"qubits\" must be an array of length n");
  }
  std::vector<QubitInit> inits;
  inits.reserve(n);
  for (const json& q : qubits) {
    if (!q.is_object()) {
      throw std::invalid_argument("qubit entry must be an object");
    }
    require_keys(q, "qubit entry", {"alpha", "theta"});
    inits.emplace_back(get_angle(q, "alpha", "qubit entry"),
                       get_angle(q, "theta", "qubit entry"));
  }

  const json& edges = root.at("edges");
  if (!edges.is_array()) {
    throw std::invalid_argument("\"edges\" must be an array");
  }
  std::vector<Edge> edge_list;
  edge_list.reserve(edges.size());
  for (const json& e : edges) {
    if (!e.is_object()) {
      throw std::invalid_argument("edge entry must be an object");
    }
    require_keys(e, "edge entry", {"i", "j", "phi"});
    edge_list.push_back(Edge{get_index(e, "i", "edge entry"),
                             get_index(e, "j", "edge entry"),
                             get_angle(e, "phi", "edge entry")});
  }

  return GraphStateSpec(WeightedGraph(n, std::move(edge_list)),
                        std::move(inits));
}

std::string serialize_spec(const GraphStateSpec& spec) {
  json qubits = json::array();
  for (const QubitInit& q : spec.inits()) {
    qubits.push_back({{"alpha", q.alpha()}, {"theta", q.theta()}});
  }
  json edges = json::array();
  for (const Edge& e : spec.graph().edges()) {
    edges.push_back({{"i", e.i}, {"j", e.j}, {"phi", e.phi}});
  }
  json root;
  root["n"] = spec.n_qubits();
  root["qubits"] = std::move(qubits);
  root["edges"] = std::move(edges);
  return root.dump(2) + "\n";
}

}  // namespace graphent
