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

#ifndef GRAPHENT_TESTS_TEST_UTIL_HPP_
#define GRAPHENT_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "graphent/graph.hpp"
#include "graphent/statevector.hpp"

namespace graphent::testutil {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

// Random spec over n in [n_min, n_max] vertices: every unordered pair
// becomes an edge with probability 1/2, weights uniform in [0, 2*pi),
// thetas in [0, pi], alphas in [0, 2*pi).
inline GraphStateSpec random_spec(std::mt19937_64& rng, std::size_t n_min = 2,
                                  std::size_t n_max = 8) {
  const std::size_t n = n_min + rng() % (n_max - n_min + 1);
  std::vector<QubitInit> inits;
  inits.reserve(n);
  for (std::size_t q = 0; q < n; ++q) {
    inits.emplace_back(uniform(rng, 0.0, 2.0 * std::numbers::pi),
                       uniform(rng, 0.0, std::numbers::pi));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng() % 2 == 0) {
        edges.push_back(Edge{i, j, uniform(rng, 0.0, 2.0 * std::numbers::pi)});
      }
    }
  }
  return GraphStateSpec(WeightedGraph(n, std::move(edges)), std::move(inits));
}

// Largest amplitude difference after aligning b's global phase to a's.
inline double max_amp_diff_up_to_phase(const StateVector& a,
                                       const StateVector& b) {
  if (a.dim() != b.dim()) {
    return 1.0;
  }
  std::size_t ref = 0;
  double best = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (std::abs(a.amplitude(i)) > best) {
      best = std::abs(a.amplitude(i));
      ref = i;
    }
  }
  const complex_t br = b.amplitude(ref);
  if (std::abs(br) == 0.0) {
    return 1.0;
  }
  complex_t phase = a.amplitude(ref) / br;
  phase /= std::abs(phase);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    worst = std::max(worst,
                     std::abs(a.amplitude(i) - phase * b.amplitude(i)));
  }
  return worst;
}

}  // namespace graphent::testutil

#endif  // GRAPHENT_TESTS_TEST_UTIL_HPP_
