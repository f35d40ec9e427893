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

#ifndef GRAPHENT_REPORT_HPP_
#define GRAPHENT_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphent/entanglement.hpp"
#include "graphent/measurement.hpp"

namespace graphent {

namespace detail {

// Doubles in CSV output carry 17 significant digits, enough for an
// exact strtod round-trip.
std::string csv_double(double value);

}  // namespace detail

struct ReportRow {
  QubitEntanglement exact;
  std::optional<MeasurementEstimate> shot;
};

// Per-qubit entanglement by all routes; the shot-based estimate is run
// only when `shots_per_basis` is set.
std::vector<ReportRow> build_report(const GraphStateSpec& spec,
                                    std::optional<std::uint64_t> shots_per_basis,
                                    std::uint64_t seed, double readout_flip);

// Largest |e_closed - e_exact| over the rows; the CLI refuses to emit
// results when this exceeds its agreement threshold.
double max_route_disagreement(const std::vector<ReportRow>& rows);

// Header row always present. Columns: qubit, e_closed, e_exact,
// e_oracle, bx, by, bz, then e_shots, stderr, shots, seed, flip when
// the rows carry shot estimates.
std::string report_to_csv(const std::vector<ReportRow>& rows);

std::string report_to_json(const std::vector<ReportRow>& rows);

}  // namespace graphent

#endif  // GRAPHENT_REPORT_HPP_
