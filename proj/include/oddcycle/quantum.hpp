// Copyright 2026 The oddcycle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ODDCYCLE_QUANTUM_HPP_
#define ODDCYCLE_QUANTUM_HPP_

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "oddcycle/game.hpp"

namespace oddcycle::quantum {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec4 = Eigen::Vector4cd;

// Two-qubit pure state over |00>,|01>,|10>,|11>, Alice's qubit first.
struct SharedState {
  Vec4 amplitudes = Vec4::Zero();
  double theta = 0.0;

  // (|01> + e^{i theta}|10>)/sqrt(2); theta is reduced into [0, 2 pi).
  static SharedState phase_bell(double theta);
  // Throws unless the squared magnitudes sum to 1 within 1e-12.
  static SharedState from_amplitudes(const Vec4& amplitudes);
};

// Projectors onto (|0> +- e^{i angle}|1>)/sqrt(2).
struct MeasurementBasis {
  double angle = 0.0;

  Mat2 plus() const;
  Mat2 minus() const;
  // plus() - minus()
  Mat2 observable() const;
};

// Alice measures question x in basis angle alice_angles[x][i] on the i-th
// copy of the shared state. Bob measures in the complex-conjugate basis
// (|0> +- e^{-i beta}|1>)/sqrt(2); with the phase-shifted Bell state the
// outcome correlation is then cos(theta - alpha - beta).
//
// The outcome "+" maps to answer bit flip, "-" to 1 - flip, per side.
struct QubitStrategy {
  SharedState state = SharedState::phase_bell(0.0);
  std::vector<std::vector<double>> alice_angles;
  std::vector<std::vector<double>> bob_angles;
  int alice_flip = 0;
  int bob_flip = 0;
};

// <psi| A (x) B |psi>. Throws on non-Hermitian input (1e-10) and on an
// imaginary residue above 1e-10.
double expectation(const SharedState& state, const Mat2& a, const Mat2& b);

// Born-rule average of the predicate. Repeated games use one copy of the
// state per coordinate.
double win_probability(const game::GameSpec& game, const QubitStrategy& qs);

// Angles for the canonical odd-cycle strategy on each of d coordinates,
// with the outcome-to-answer flips that maximize the win probability
// (ties resolved in the order (0,0), (0,1), (1,0), (1,1)).
QubitStrategy canonical_odd_cycle_strategy(int n, double theta, int d = 1);

// Deterministic XOR strategy realized with angles pi*a and pi*b + theta, so
// that the outcome parity equals a ^ b on every coordinate.
QubitStrategy embed_deterministic(const game::GameSpec& game,
                                  const game::DeterministicStrategy& s, double theta = 0.0);

// Uniformly random angles over the game's questions.
QubitStrategy random_strategy(const game::GameSpec& game, std::uint64_t seed, double theta = 0.0);

struct OptimizeOptions {
  unsigned starts = 8;
  unsigned sweeps = 200;
  std::uint64_t seed = 0;
  unsigned threads = 0;

  bool operator==(const OptimizeOptions&) const = default;
};

struct OptimizeResult {
  QubitStrategy strategy;
  double value = 0.0;
  unsigned best_start = 0;
};

// Multi-start coordinate ascent over all measurement angles. Start 0 is
// `initial` (when given); the remaining starts are random. Each step
// maximizes exactly over one angle. The result is a lower bound on the
// quantum value.
OptimizeResult optimize_angles(const game::GameSpec& game,
                               const std::optional<QubitStrategy>& initial,
                               const OptimizeOptions& options = {});

struct BiasReport {
  double win_probability = 0.0;
  double bias = 0.0;
  double reference_bias = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool within = false;
};

// Checks (1 - epsilon) * reference <= bias <= reference. Without a reference
// the optimized bias (seeded from qs) is used. Throws unless 0 < epsilon < 1.
BiasReport bias_and_approximality(const game::GameSpec& game, const QubitStrategy& qs,
                                  double epsilon,
                                  std::optional<double> reference_bias = std::nullopt);

// Observables A_i and B_ij (i != j; diagonal entries unused) and a state for
// the two-player XOR error functional.
struct XorObservables {
  std::vector<Mat2> a;
  std::vector<std::vector<Mat2>> b;
  Vec4 state = Vec4::Zero();
};

// Sum over i < j of |((A_i + A_j)/sqrt2 (x) I) psi - (I (x) B_ij) psi|^2 plus
// the same with A_i - A_j and B_ji. Throws unless every observable is
// Hermitian with square I (1e-8) and the state is normalized.
double xor_error_functional(const XorObservables& obs);

Mat4 kron(const Mat2& a, const Mat2& b);
Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();

}  // namespace oddcycle::quantum

#endif  // ODDCYCLE_QUANTUM_HPP_
