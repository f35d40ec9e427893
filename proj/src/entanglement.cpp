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

#include "graphent/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "graphent/graphstate.hpp"

namespace graphent {

namespace {

void check_theta(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::invalid_argument("theta must lie in [0, pi]");
  }
}

}  // namespace

complex_t z_factor(const GraphStateSpec& spec, std::size_t l) {
  const WeightedGraph& g = spec.graph();
  const double w = g.weighted_degree(l);  // also range-checks l
  complex_t prod = 1.0;
  for (const Edge& e : g.edges()) {
    if (e.i != l && e.j != l) {
      continue;
    }
    const std::size_t k = (e.i == l) ? e.j : e.i;
    const double half = 0.5 * e.phi;
    prod *= complex_t(std::cos(half),
                      std::sin(half) * std::cos(spec.inits()[k].theta()));
  }
  return std::polar(1.0, -(spec.inits()[l].alpha() + 0.5 * w)) * prod;
}

double mean_sigma_x(const GraphStateSpec& spec, std::size_t l) {
  return std::sin(spec.inits().at(l).theta()) * z_factor(spec, l).real();
}

double mean_sigma_y(const GraphStateSpec& spec, std::size_t l) {
  return -std::sin(spec.inits().at(l).theta()) * z_factor(spec, l).imag();
}

double mean_sigma_z(const GraphStateSpec& spec, std::size_t l) {
  if (l >= spec.n_qubits()) {
    throw std::out_of_range("qubit index out of range");
  }
  return std::cos(spec.inits()[l].theta());
}

double entanglement_closed_form(const GraphStateSpec& spec, std::size_t l) {
  const WeightedGraph& g = spec.graph();
  if (l >= g.n_vertices()) {
    throw std::out_of_range("qubit index out of range");
  }
  double prod = 1.0;
  for (const Edge& e : g.edges()) {
    if (e.i != l && e.j != l) {
      continue;
    }
    const std::size_t k = (e.i == l) ? e.j : e.i;
    // cos^2(phi/2) and sin^2(phi/2) through the half-angle identity:
    // one rounding of cos(phi) instead of two of cos(phi/2)^2, which
    // keeps factors at exact binary angles (phi = pi/2, pi) exact.
    const double cphi = std::cos(e.phi);
    const double ck = std::cos(spec.inits()[k].theta());
    prod *= 0.5 * (1.0 + cphi) + 0.5 * (1.0 - cphi) * ck * ck;
  }
  const double st = std::sin(spec.inits()[l].theta());
  const double ct = std::cos(spec.inits()[l].theta());
  // The radicand is sin^2 * (product of factors in [0, 1]) + cos^2, so
  // it can only leave [0, 1] through rounding.
  const double radicand = std::clamp(st * st * prod + ct * ct, 0.0, 1.0);
  return 0.5 * (1.0 - std::sqrt(radicand));
}

double entanglement_uniform(double theta, double phi, std::size_t degree) {
  check_theta(theta);
  const double wrapped = wrap_angle(phi);
  const double cphi = std::cos(wrapped);
  const double ct = std::cos(theta);
  // Same half-angle form as entanglement_closed_form so uniform graphs
  // agree with it bit for bit.
  const double factor = 0.5 * (1.0 + cphi) + 0.5 * (1.0 - cphi) * ct * ct;
  // Integer power by repeated multiply keeps exact cases (e.g. 0.5^2)
  // exact, which std::pow does not guarantee.
  double prod = 1.0;
  for (std::size_t k = 0; k < degree; ++k) {
    prod *= factor;
  }
  const double st = std::sin(theta);
  const double radicand = std::clamp(st * st * prod + ct * ct, 0.0, 1.0);
  return 0.5 * (1.0 - std::sqrt(radicand));
}

double two_qubit_e_phi(double phi01) {
  const double wrapped = wrap_angle(phi01);
  return 0.5 * (1.0 - std::abs(std::cos(0.5 * wrapped)));
}

double two_qubit_e_theta(double theta0, double theta1) {
  check_theta(theta0);
  check_theta(theta1);
  const double c0 = std::cos(theta0);
  const double c1 = std::cos(theta1);
  const double radicand =
      std::clamp(c0 * c0 + c1 * c1 - c0 * c0 * c1 * c1, 0.0, 1.0);
  return 0.5 * (1.0 - std::sqrt(radicand));
}

double entanglement_from_bloch(const BlochVector& b) {
  return 0.5 * (1.0 - std::min(1.0, b.magnitude()));
}

double entanglement_oracle_schmidt(const StateVector& state, std::size_t l) {
  const double lmax = state.reduced_density(l).lambda_max();
  return std::clamp(1.0 - lmax, 0.0, 0.5);
}

std::vector<QubitEntanglement> analyze_entanglement(
    const GraphStateSpec& spec) {
  const StateVector state = build_graph_state(spec);
  std::vector<QubitEntanglement> rows;
  rows.reserve(spec.n_qubits());
  for (std::size_t q = 0; q < spec.n_qubits(); ++q) {
    QubitEntanglement row;
    row.qubit = q;
    row.e_closed_form = entanglement_closed_form(spec, q);
    row.bloch = state.bloch_vector(q);
    row.e_exact_meanspin = entanglement_from_bloch(row.bloch);
    row.e_oracle_schmidt = entanglement_oracle_schmidt(state, q);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace graphent
