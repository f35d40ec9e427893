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

#include "graphent/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "graphent/entanglement.hpp"
#include "graphent/graphstate.hpp"
#include "graphent/report.hpp"

namespace graphent {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// splitmix64 finalizer over (seed, grid index): decorrelates per-point
// sampling streams while keeping them a pure function of the inputs.
std::uint64_t point_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

// Runs fn(i) for i in [0, count) on up to hardware_concurrency threads.
// Each index is claimed exactly once; results must be written to
// index-addressed slots by the callers so ordering stays deterministic.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const unsigned hw = std::thread::hardware_concurrency();
  const std::size_t n_threads =
      std::max<std::size_t>(1, std::min<std::size_t>(hw ? hw : 1, count));
  if (n_threads == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      fn(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  workers.reserve(n_threads);
  for (std::size_t t = 0; t < n_threads; ++t) {
    workers.emplace_back([&]() {
      for (std::size_t i = next.fetch_add(1); i < count;
           i = next.fetch_add(1)) {
        fn(i);
      }
    });
  }
  for (std::thread& w : workers) {
    w.join();
  }
}

void check_points(std::size_t points) {
  if (points < 2) {
    throw std::invalid_argument("sweep needs at least 2 grid points");
  }
}

// k-th of `points` values spanning [0, span]; endpoints land exactly on
// 0 and span because the ratio is exact there.
double grid_value(double span, std::size_t k, std::size_t points) {
  return span * (static_cast<double>(k) / static_cast<double>(points - 1));
}

template <typename Row>
void append_shot_columns(std::string& out, const Row& row) {
  if (!row.shot) {
    return;
  }
  const MeasurementEstimate& m = *row.shot;
  out += ',' + detail::csv_double(m.e_estimate);
  out += ',' + detail::csv_double(m.stderr_e);
  out += ',' + std::to_string(m.shots_per_basis);
  out += ',' + std::to_string(m.seed);
  out += ',' + detail::csv_double(m.readout_flip);
}

template <typename Row>
double worst_disagreement(const std::vector<Row>& rows) {
  double worst = 0.0;
  for (const Row& row : rows) {
    worst = std::max(worst, std::abs(row.e_closed - row.e_exact));
  }
  return worst;
}

}  // namespace

GraphStateSpec two_qubit_phi_spec(double phi01) {
  const double half_pi = std::numbers::pi / 2.0;
  return GraphStateSpec(WeightedGraph(2, {Edge{0, 1, phi01}}),
                        {QubitInit(0.0, half_pi), QubitInit(0.0, half_pi)});
}

GraphStateSpec two_qubit_theta_spec(double theta0, double theta1) {
  return GraphStateSpec(WeightedGraph(2, {Edge{0, 1, std::numbers::pi}}),
                        {QubitInit(0.0, theta0), QubitInit(0.0, theta1)});
}

std::vector<PhiSweepRow> sweep_phi(const SweepOptions& options) {
  check_points(options.points);
  std::vector<PhiSweepRow> rows(options.points);
  parallel_for(options.points, [&](std::size_t k) {
    const double phi = grid_value(kTwoPi, k, options.points);
    const GraphStateSpec spec = two_qubit_phi_spec(phi);
    PhiSweepRow& row = rows[k];
    row.phi = phi;
    row.e_closed = entanglement_closed_form(spec, 0);
    row.e_exact =
        entanglement_from_bloch(build_graph_state(spec).bloch_vector(0));
    if (options.shots_per_basis) {
      row.shot = estimate_bloch(spec, 0, *options.shots_per_basis,
                                point_seed(options.seed, k),
                                options.readout_flip);
    }
  });
  return rows;
}

std::vector<ThetaSweepRow> sweep_theta(const SweepOptions& options) {
  check_points(options.points);
  const std::size_t n = options.points;
  std::vector<ThetaSweepRow> rows(n * n);
  parallel_for(n * n, [&](std::size_t idx) {
    const std::size_t k0 = idx / n;
    const std::size_t k1 = idx % n;
    const double theta0 = grid_value(std::numbers::pi, k0, n);
    const double theta1 = grid_value(std::numbers::pi, k1, n);
    const GraphStateSpec spec = two_qubit_theta_spec(theta0, theta1);
    ThetaSweepRow& row = rows[idx];
    row.theta0 = theta0;
    row.theta1 = theta1;
    row.e_closed = entanglement_closed_form(spec, 0);
    row.e_exact =
        entanglement_from_bloch(build_graph_state(spec).bloch_vector(0));
    if (options.shots_per_basis) {
      row.shot = estimate_bloch(spec, 0, *options.shots_per_basis,
                                point_seed(options.seed, idx),
                                options.readout_flip);
    }
  });
  return rows;
}

std::string phi_sweep_to_csv(const std::vector<PhiSweepRow>& rows) {
  const bool with_shots = !rows.empty() && rows.front().shot.has_value();
  std::string out = "phi,e_closed,e_exact";
  if (with_shots) {
    out += ",e_shots,stderr,shots,seed,flip";
  }
  out += "\n";
  for (const PhiSweepRow& row : rows) {
    out += detail::csv_double(row.phi);
    out += ',' + detail::csv_double(row.e_closed);
    out += ',' + detail::csv_double(row.e_exact);
    append_shot_columns(out, row);
    out += "\n";
  }
  return out;
}

std::string theta_sweep_to_csv(const std::vector<ThetaSweepRow>& rows) {
  const bool with_shots = !rows.empty() && rows.front().shot.has_value();
  std::string out = "theta0,theta1,e_closed,e_exact";
  if (with_shots) {
    out += ",e_shots,stderr,shots,seed,flip";
  }
  out += "\n";
  for (const ThetaSweepRow& row : rows) {
    out += detail::csv_double(row.theta0);
    out += ',' + detail::csv_double(row.theta1);
    out += ',' + detail::csv_double(row.e_closed);
    out += ',' + detail::csv_double(row.e_exact);
    append_shot_columns(out, row);
    out += "\n";
  }
  return out;
}

double max_sweep_disagreement(const std::vector<PhiSweepRow>& rows) {
  return worst_disagreement(rows);
}

double max_sweep_disagreement(const std::vector<ThetaSweepRow>& rows) {
  return worst_disagreement(rows);
}

}  // namespace graphent
