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

#include "graphent/report.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace graphent {

namespace detail {

std::string csv_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace detail

std::vector<ReportRow> build_report(
    const GraphStateSpec& spec, std::optional<std::uint64_t> shots_per_basis,
    std::uint64_t seed, double readout_flip) {
  std::vector<ReportRow> rows;
  rows.reserve(spec.n_qubits());
  for (QubitEntanglement& exact : analyze_entanglement(spec)) {
    ReportRow row;
    row.exact = exact;
    if (shots_per_basis) {
      row.shot = estimate_bloch(spec, exact.qubit, *shots_per_basis, seed,
                                readout_flip);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

double max_route_disagreement(const std::vector<ReportRow>& rows) {
  double worst = 0.0;
  for (const ReportRow& row : rows) {
    worst = std::max(
        worst, std::abs(row.exact.e_closed_form - row.exact.e_exact_meanspin));
  }
  return worst;
}

std::string report_to_csv(const std::vector<ReportRow>& rows) {
  const bool with_shots = !rows.empty() && rows.front().shot.has_value();
  std::string out = "qubit,e_closed,e_exact,e_oracle,bx,by,bz";
  if (with_shots) {
    out += ",e_shots,stderr,shots,seed,flip";
  }
  out += "\n";
  for (const ReportRow& row : rows) {
    const QubitEntanglement& e = row.exact;
    out += std::to_string(e.qubit);
    for (double v : {e.e_closed_form, e.e_exact_meanspin, e.e_oracle_schmidt,
                     e.bloch.x, e.bloch.y, e.bloch.z}) {
      out += ',';
      out += detail::csv_double(v);
    }
    if (with_shots) {
      const MeasurementEstimate& m = *row.shot;
      out += ',' + detail::csv_double(m.e_estimate);
      out += ',' + detail::csv_double(m.stderr_e);
      out += ',' + std::to_string(m.shots_per_basis);
      out += ',' + std::to_string(m.seed);
      out += ',' + detail::csv_double(m.readout_flip);
    }
    out += "\n";
  }
  return out;
}

std::string report_to_json(const std::vector<ReportRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const ReportRow& row : rows) {
    const QubitEntanglement& e = row.exact;
    nlohmann::json item{{"qubit", e.qubit},
                        {"e_closed", e.e_closed_form},
                        {"e_exact", e.e_exact_meanspin},
                        {"e_oracle", e.e_oracle_schmidt},
                        {"bloch", {e.bloch.x, e.bloch.y, e.bloch.z}}};
    if (row.shot) {
      const MeasurementEstimate& m = *row.shot;
      item["shot"] = {{"e_shots", m.e_estimate},
                      {"stderr", m.stderr_e},
                      {"bloch", {m.bloch_estimate.x, m.bloch_estimate.y,
                                 m.bloch_estimate.z}},
                      {"shots", m.shots_per_basis},
                      {"seed", m.seed},
                      {"flip", m.readout_flip}};
    }
    arr.push_back(std::move(item));
  }
  return arr.dump(2) + "\n";
}

}  // namespace graphent
