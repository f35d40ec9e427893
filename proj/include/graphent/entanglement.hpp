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

#ifndef GRAPHENT_ENTANGLEMENT_HPP_
#define GRAPHENT_ENTANGLEMENT_HPP_

#include <complex>
#include <cstddef>
#include <vector>

#include "graphent/graph.hpp"
#include "graphent/statevector.hpp"

namespace graphent {

// Complex factor collecting the influence of qubit l's neighborhood on
// its mean spin:
//
//   z_l = e^{-i(alpha_l + w_l/2)} * prod_{k ~ l} (cos(phi_kl/2)
//                                                 + i sin(phi_kl/2) cos(theta_k))
//
// where w_l is the weighted degree of l. The transverse spin components
// of the graph state are then
//
//   <sx_l> = sin(theta_l) Re(z_l)
//   <sy_l> = -sin(theta_l) Im(z_l)
//   <sz_l> = cos(theta_l)
complex_t z_factor(const GraphStateSpec& spec, std::size_t l);

double mean_sigma_x(const GraphStateSpec& spec, std::size_t l);
double mean_sigma_y(const GraphStateSpec& spec, std::size_t l);
double mean_sigma_z(const GraphStateSpec& spec, std::size_t l);

// Geometric entanglement of qubit l against the rest, evaluated from
// the neighborhood angles alone:
//
//   E_l = (1 - sqrt(sin^2(theta_l) * prod_k [cos^2(phi_kl/2)
//              + sin^2(phi_kl/2) cos^2(theta_k)] + cos^2(theta_l))) / 2
//
// Touches only N_G[l]; cost is O(deg l), independent of qubit count.
double entanglement_closed_form(const GraphStateSpec& spec, std::size_t l);

// Special case: every init at (alpha, theta), every incident weight phi,
// vertex degree `degree`. The product collapses to a single power.
double entanglement_uniform(double theta, double phi, std::size_t degree);

// Two-qubit family |00> -> both qubits through ry(pi/2), one cp(phi01):
//   E = (1 - |cos(phi01 / 2)|) / 2
double two_qubit_e_phi(double phi01);

// Two-qubit family ry(theta0) x ry(theta1), cp(pi):
//   E = (1 - sqrt(cos^2 t0 + cos^2 t1 - cos^2 t0 cos^2 t1)) / 2
double two_qubit_e_theta(double theta0, double theta1);

// E = (1 - |b|) / 2 with |b| clamped to 1, so rounding noise above the
// Bloch sphere cannot produce a negative entanglement.
double entanglement_from_bloch(const BlochVector& b);

// Independent route: E = 1 - lambda_max(rho_l) from the reduced density
// matrix of qubit l. Agrees with the mean-spin routes because rho_l of
// a pure state has eigenvalues (1 +- |b|)/2.
double entanglement_oracle_schmidt(const StateVector& state, std::size_t l);

struct QubitEntanglement {
  std::size_t qubit = 0;
  double e_closed_form = 0.0;
  double e_exact_meanspin = 0.0;
  double e_oracle_schmidt = 0.0;
  BlochVector bloch;
};

// Builds the state once and evaluates all three routes for every qubit.
std::vector<QubitEntanglement> analyze_entanglement(const GraphStateSpec& spec);

}  // namespace graphent

#endif  // GRAPHENT_ENTANGLEMENT_HPP_
