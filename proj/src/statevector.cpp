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

#include "graphent/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace graphent {

namespace {

// 53 uniform mantissa bits in [0, 1). Spelled out instead of using
// std::uniform_real_distribution so sampled counts are reproducible
// across standard library implementations.
double next_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

double BlochVector::magnitude() const {
  return std::sqrt(x * x + y * y + z * z);
}

double ReducedDensity::lambda_max() const {
  const double tr = rho00.real() + rho11.real();
  // Hermitian 2x2 gap form: algebraically tr^2 - 4 det, but free of the
  // cancellation that form suffers when the eigenvalues nearly coincide.
  const double gap = rho00.real() - rho11.real();
  const double disc = gap * gap + 4.0 * std::norm(rho01);
  return 0.5 * (tr + std::sqrt(disc));
}

StateVector::StateVector(std::size_t n_qubits)
    : n_qubits_(n_qubits), amps_(std::size_t{1} << n_qubits) {}

StateVector StateVector::zero(std::size_t n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count must lie in [1, 24]");
  }
  StateVector sv(n_qubits);
  sv.amps_[0] = 1.0;
  return sv;
}

void StateVector::check_qubit(std::size_t q) const {
  if (q >= n_qubits_) {
    throw std::out_of_range("qubit index out of range");
  }
}

void StateVector::apply_1q(std::size_t q, complex_t u00, complex_t u01,
                           complex_t u10, complex_t u11) {
  const std::size_t stride = std::size_t{1} << q;
  const std::size_t dim = amps_.size();
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t off = 0; off < stride; ++off) {
      const std::size_t i0 = base + off;
      const std::size_t i1 = i0 + stride;
      const complex_t a0 = amps_[i0];
      const complex_t a1 = amps_[i1];
      amps_[i0] = u00 * a0 + u01 * a1;
      amps_[i1] = u10 * a0 + u11 * a1;
    }
  }
}

void StateVector::apply_ry(std::size_t q, double theta) {
  check_qubit(q);
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  apply_1q(q, c, -s, s, c);
}

void StateVector::apply_rz(std::size_t q, double alpha) {
  check_qubit(q);
  const complex_t lo = std::polar(1.0, -0.5 * alpha);
  const complex_t hi = std::polar(1.0, 0.5 * alpha);
  const std::size_t stride = std::size_t{1} << q;
  const std::size_t dim = amps_.size();
  for (std::size_t idx = 0; idx < dim; ++idx) {
    amps_[idx] *= (idx & stride) ? hi : lo;
  }
}

void StateVector::apply_rx(std::size_t q, double beta) {
  check_qubit(q);
  const double c = std::cos(0.5 * beta);
  const complex_t ms(0.0, -std::sin(0.5 * beta));
  apply_1q(q, c, ms, ms, c);
}

void StateVector::apply_h(std::size_t q) {
  check_qubit(q);
  const double r = std::numbers::sqrt2 / 2.0;
  apply_1q(q, r, r, r, -r);
}

void StateVector::apply_cp(std::size_t a, std::size_t b, double phi) {
  check_qubit(a);
  check_qubit(b);
  if (a == b) {
    throw std::invalid_argument("controlled phase needs two distinct qubits");
  }
  const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
  const complex_t phase = std::polar(1.0, phi);
  const std::size_t dim = amps_.size();
  for (std::size_t idx = 0; idx < dim; ++idx) {
    if ((idx & mask) == mask) {
      amps_[idx] *= phase;
    }
  }
}

double StateVector::norm_squared() const {
  double sum = 0.0;
  for (const complex_t& a : amps_) {
    sum += std::norm(a);
  }
  return sum;
}

double StateVector::expectation_pauli(std::size_t q, Pauli axis) const {
  check_qubit(q);
  const std::size_t stride = std::size_t{1} << q;
  const std::size_t dim = amps_.size();
  if (axis == Pauli::Z) {
    double sum = 0.0;
    for (std::size_t idx = 0; idx < dim; ++idx) {
      const double p = std::norm(amps_[idx]);
      sum += (idx & stride) ? -p : p;
    }
    return sum;
  }
  // <x| sigma_x or sigma_y |x'> only connects index pairs differing in
  // bit q, so both reduce to a sum over off-diagonal products.
  double acc = 0.0;
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t off = 0; off < stride; ++off) {
      const complex_t prod =
          std::conj(amps_[base + off]) * amps_[base + off + stride];
      acc += (axis == Pauli::X) ? prod.real() : prod.imag();
    }
  }
  return 2.0 * acc;
}

BlochVector StateVector::bloch_vector(std::size_t q) const {
  return BlochVector{expectation_pauli(q, Pauli::X),
                     expectation_pauli(q, Pauli::Y),
                     expectation_pauli(q, Pauli::Z)};
}

ReducedDensity StateVector::reduced_density(std::size_t q) const {
  check_qubit(q);
  const std::size_t stride = std::size_t{1} << q;
  const std::size_t dim = amps_.size();
  double p00 = 0.0;
  double p11 = 0.0;
  complex_t coh = 0.0;
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t off = 0; off < stride; ++off) {
      const complex_t a0 = amps_[base + off];
      const complex_t a1 = amps_[base + off + stride];
      p00 += std::norm(a0);
      p11 += std::norm(a1);
      coh += a0 * std::conj(a1);
    }
  }
  return ReducedDensity{p00, coh, std::conj(coh), p11};
}

double StateVector::one_probability(std::size_t q) const {
  check_qubit(q);
  const std::size_t stride = std::size_t{1} << q;
  const std::size_t dim = amps_.size();
  double p1 = 0.0;
  for (std::size_t idx = 0; idx < dim; ++idx) {
    if (idx & stride) {
      p1 += std::norm(amps_[idx]);
    }
  }
  return std::clamp(p1, 0.0, 1.0);
}

ShotCounts StateVector::sample_qubit(std::size_t q, std::uint64_t shots,
                                     std::uint64_t seed,
                                     double readout_flip) const {
  check_qubit(q);
  if (shots < 1) {
    throw std::invalid_argument("need at least one shot");
  }
  if (!(readout_flip >= 0.0 && readout_flip <= 0.5)) {
    throw std::invalid_argument("readout flip probability must lie in [0, 0.5]");
  }
  const double p1 = one_probability(q);
  std::mt19937_64 rng(seed);
  ShotCounts counts{0, 0, shots, seed};
  for (std::uint64_t s = 0; s < shots; ++s) {
    bool one = next_uniform(rng) < p1;
    if (readout_flip > 0.0 && next_uniform(rng) < readout_flip) {
      one = !one;
    }
    if (one) {
      ++counts.ones;
    } else {
      ++counts.zeros;
    }
  }
  return counts;
}

}  // namespace graphent
