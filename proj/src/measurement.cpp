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

#include "graphent/measurement.hpp"

#include <cmath>
#include <numbers>

#include "graphent/entanglement.hpp"
#include "graphent/graphstate.hpp"

namespace graphent {

namespace {

// Fixed salts giving the x and y bases independent shot streams; the z
// basis uses the caller's seed unchanged.
constexpr std::uint64_t kSeedSaltX = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kSeedSaltY = 0xC2B2AE3D27D4EB4FULL;

double sample_component(const GraphStateSpec& spec, std::size_t l, Pauli axis,
                        std::uint64_t shots, std::uint64_t seed, double flip) {
  StateVector state = build_graph_state(spec);
  // Conjugating the z-basis measurement: ry(-pi/2) maps sigma_x onto
  // sigma_z, rx(+pi/2) maps sigma_y onto sigma_z.
  if (axis == Pauli::X) {
    state.apply_ry(l, -std::numbers::pi / 2.0);
  } else if (axis == Pauli::Y) {
    state.apply_rx(l, std::numbers::pi / 2.0);
  }
  const ShotCounts counts = state.sample_qubit(l, shots, seed, flip);
  return (static_cast<double>(counts.zeros) -
          static_cast<double>(counts.ones)) /
         static_cast<double>(counts.shots);
}

}  // namespace

MeasurementEstimate estimate_bloch(const GraphStateSpec& spec, std::size_t l,
                                   std::uint64_t shots_per_basis,
                                   std::uint64_t seed, double readout_flip) {
  MeasurementEstimate est;
  est.qubit = l;
  est.shots_per_basis = shots_per_basis;
  est.seed = seed;
  est.readout_flip = readout_flip;
  est.bloch_estimate.x = sample_component(spec, l, Pauli::X, shots_per_basis,
                                          seed ^ kSeedSaltX, readout_flip);
  est.bloch_estimate.y = sample_component(spec, l, Pauli::Y, shots_per_basis,
                                          seed ^ kSeedSaltY, readout_flip);
  est.bloch_estimate.z = sample_component(spec, l, Pauli::Z, shots_per_basis,
                                          seed, readout_flip);
  est.e_estimate = entanglement_from_bloch(est.bloch_estimate);

  // Delta method: Var(b_i) = (1 - b_i^2)/shots for a (zeros - ones)/shots
  // estimator, and d|b|/db_i = b_i/|b|, so
  //   stderr_E = sqrt(sum b_i^2 (1 - b_i^2) / shots) / (2 |b|).
  const double bx = est.bloch_estimate.x;
  const double by = est.bloch_estimate.y;
  const double bz = est.bloch_estimate.z;
  const double shots = static_cast<double>(shots_per_basis);
  const double var_sum = (bx * bx * (1.0 - bx * bx) +
                          by * by * (1.0 - by * by) +
                          bz * bz * (1.0 - bz * bz)) /
                         shots;
  const double r = est.bloch_estimate.magnitude();
  if (r > 0.0) {
    est.stderr_e = 0.5 * std::sqrt(var_sum) / r;
  } else {
    // The gradient blows up at |b| = 0; fall back to the unprojected
    // component spread so the caller still gets a finite scale.
    est.stderr_e = 0.5 * std::sqrt((3.0 - bx * bx - by * by - bz * bz) / shots);
  }
  return est;
}

double estimate_entanglement(const GraphStateSpec& spec, std::size_t l,
                             std::uint64_t shots_per_basis, std::uint64_t seed,
                             double readout_flip) {
  return estimate_bloch(spec, l, shots_per_basis, seed, readout_flip)
      .e_estimate;
}

}  // namespace graphent
