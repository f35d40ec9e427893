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

#ifndef GRAPHENT_MEASUREMENT_HPP_
#define GRAPHENT_MEASUREMENT_HPP_

#include <cstddef>
#include <cstdint>

#include "graphent/graph.hpp"
#include "graphent/statevector.hpp"

namespace graphent {

struct MeasurementEstimate {
  std::size_t qubit = 0;
  BlochVector bloch_estimate;
  double e_estimate = 0.0;
  double stderr_e = 0.0;
  std::uint64_t shots_per_basis = 0;
  std::uint64_t seed = 0;
  double readout_flip = 0.0;
};

// Shot-based protocol for the mean spin of qubit l. Three bases, each
// from a freshly built copy of the state:
//
//   <sx>: rotate qubit l by ry(-pi/2), then sample the z basis
//   <sy>: rotate qubit l by rx(+pi/2), then sample the z basis
//   <sz>: sample directly
//
// Each component estimate is (zeros - ones) / shots. The three bases
// draw fresh shots from sub-seeds derived from `seed` (see the salt
// constants in measurement.cpp), so changing any single input changes
// the estimate deterministically and reproducibly.
//
// stderr_e propagates the per-component binomial variances through
// E = (1 - |b|)/2 by the delta method.
MeasurementEstimate estimate_bloch(const GraphStateSpec& spec, std::size_t l,
                                   std::uint64_t shots_per_basis,
                                   std::uint64_t seed, double readout_flip);

// Same protocol; kept as a named entry point for callers that only want
// the entanglement number.
double estimate_entanglement(const GraphStateSpec& spec, std::size_t l,
                             std::uint64_t shots_per_basis, std::uint64_t seed,
                             double readout_flip);

}  // namespace graphent

#endif  // GRAPHENT_MEASUREMENT_HPP_
