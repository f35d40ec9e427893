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

#ifndef GRAPHENT_SWEEP_HPP_
#define GRAPHENT_SWEEP_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphent/graph.hpp"
#include "graphent/measurement.hpp"

namespace graphent {

struct SweepOptions {
  // Grid points per swept axis, endpoints included. At least 2.
  std::size_t points = 21;
  // When set, each grid point also runs the shot-based estimator.
  std::optional<std::uint64_t> shots_per_basis;
  std::uint64_t seed = 12345;
  double readout_flip = 0.0;
};

// Both qubits through ry(pi/2) (theta = pi/2, alpha = 0), one edge with
// weight phi01.
GraphStateSpec two_qubit_phi_spec(double phi01);

// ry(theta0) x ry(theta1) with one cp(pi) edge.
GraphStateSpec two_qubit_theta_spec(double theta0, double theta1);

struct PhiSweepRow {
  double phi = 0.0;
  double e_closed = 0.0;
  double e_exact = 0.0;
  std::optional<MeasurementEstimate> shot;
};

struct ThetaSweepRow {
  double theta0 = 0.0;
  double theta1 = 0.0;
  double e_closed = 0.0;
  double e_exact = 0.0;
  std::optional<MeasurementEstimate> shot;
};

// Entanglement of qubit 0 across phi01 in [0, 2*pi], `points` evenly
// spaced values with both endpoints on the grid. Points are evaluated
// concurrently on frozen states; rows come back in grid order and each
// point derives its own sampling seed from (seed, index), so the output
// does not depend on thread scheduling.
std::vector<PhiSweepRow> sweep_phi(const SweepOptions& options);

// Entanglement of qubit 0 over the (theta0, theta1) grid in [0, pi]^2,
// `points` values per axis, row-major in (theta0, theta1).
std::vector<ThetaSweepRow> sweep_theta(const SweepOptions& options);

// Columns: phi, e_closed, e_exact [, e_shots, stderr, shots, seed, flip]
std::string phi_sweep_to_csv(const std::vector<PhiSweepRow>& rows);

// Columns: theta0, theta1, e_closed, e_exact [, shot columns as above]
std::string theta_sweep_to_csv(const std::vector<ThetaSweepRow>& rows);

double max_sweep_disagreement(const std::vector<PhiSweepRow>& rows);
double max_sweep_disagreement(const std::vector<ThetaSweepRow>& rows);

}  // namespace graphent

#endif  // GRAPHENT_SWEEP_HPP_
