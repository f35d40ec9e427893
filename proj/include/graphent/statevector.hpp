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

#ifndef GRAPHENT_STATEVECTOR_HPP_
#define GRAPHENT_STATEVECTOR_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace graphent {

using complex_t = std::complex<double>;

enum class Pauli { X, Y, Z };

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double magnitude() const;
};

// 2x2 reduced density matrix of one qubit. Hermitian with unit trace up
// to floating-point noise; rho10 is stored anyway so callers can check.
struct ReducedDensity {
  complex_t rho00;
  complex_t rho01;
  complex_t rho10;
  complex_t rho11;

  // Larger eigenvalue, from the Hermitian trace-and-gap closed form.
  double lambda_max() const;
};

// Counts from projective measurement of one qubit in the computational
// basis, repeated over independent shots.
struct ShotCounts {
  std::uint64_t zeros = 0;
  std::uint64_t ones = 0;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
};

// Dense complex amplitude vector over n qubits, little-endian: qubit q
// is bit q of the amplitude index. Gates act in place.
class StateVector {
 public:
  // 24 qubits is 256 MiB of amplitudes; anything larger is refused so a
  // typo cannot take down the host.
  static constexpr std::size_t kMaxQubits = 24;

  // |00...0>
  static StateVector zero(std::size_t n_qubits);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const complex_t> amplitudes() const { return amps_; }
  complex_t amplitude(std::size_t index) const { return amps_.at(index); }

  // Single-qubit rotations, half-angle convention:
  //   ry(theta) = [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]]
  //   rz(alpha) = diag(e^{-i a/2}, e^{+i a/2})
  //   rx(beta)  = [[cos(b/2), -i sin(b/2)], [-i sin(b/2), cos(b/2)]]
  void apply_ry(std::size_t q, double theta);
  void apply_rz(std::size_t q, double alpha);
  void apply_rx(std::size_t q, double beta);
  void apply_h(std::size_t q);

  // Controlled phase: multiplies amplitudes with both bits set by
  // e^{i phi}. Symmetric in (a, b); cp(pi) is CZ.
  void apply_cp(std::size_t a, std::size_t b, double phi);

  // Squared 2-norm of the amplitude vector.
  double norm_squared() const;

  double expectation_pauli(std::size_t q, Pauli axis) const;
  BlochVector bloch_vector(std::size_t q) const;
  ReducedDensity reduced_density(std::size_t q) const;

  // Probability that qubit q reads 1 in the computational basis.
  double one_probability(std::size_t q) const;

  // Samples qubit q `shots` times with a fresh mt19937_64 seeded from
  // `seed`. readout_flip in [0, 0.5] flips each recorded bit with that
  // probability, modeling symmetric readout error. Does not modify the
  // state; shots are independent, not sequential collapses.
  ShotCounts sample_qubit(std::size_t q, std::uint64_t shots,
                          std::uint64_t seed, double readout_flip) const;

 private:
  explicit StateVector(std::size_t n_qubits);

  void apply_1q(std::size_t q, complex_t u00, complex_t u01, complex_t u10,
                complex_t u11);
  void check_qubit(std::size_t q) const;

  std::size_t n_qubits_;
  std::vector<complex_t> amps_;
};

}  // namespace graphent

#endif  // GRAPHENT_STATEVECTOR_HPP_
