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

#include "oddcycle/quantum.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "oddcycle/parallel.hpp"
#include "oddcycle/rng.hpp"

namespace oddcycle::quantum {

using game::GameSpec;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_hermitian(const Mat2& m, double tol) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

// Real correlation tensor T[j][k] = <psi| s_j (x) s_k |psi> over s = (I, X, Y).
// The projector onto (|0> + s e^{i phi}|1>)/sqrt2 is (I + s cos(phi) X +
// s sin(phi) Y)/2, so every Born probability is a bilinear form in T.
using Correlations = std::array<std::array<double, 3>, 3>;

Correlations correlations(const Vec4& psi) {
  const std::array<Mat2, 3> basis = {Mat2::Identity(), pauli_x(), pauli_y()};
  Correlations t{};
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      t[j][k] = (psi.adjoint() * kron(basis[j], basis[k]) * psi)(0, 0).real();
    }
  }
  return t;
}

struct Direction {
  double c = 1.0;
  double s = 0.0;
};

// Probabilities of the four answer pairs (a, b) on one coordinate.
struct Joint {
  double p[2][2];
};

Joint joint_answers(const Correlations& t, Direction alice, Direction bob, int alice_flip,
                    int bob_flip) {
  Joint out{};
  for (int oa = 0; oa < 2; ++oa) {
    const double sa = oa == 0 ? 1.0 : -1.0;
    const double u[3] = {1.0, sa * alice.c, sa * alice.s};
    for (int ob = 0; ob < 2; ++ob) {
      const double sb = ob == 0 ? 1.0 : -1.0;
      // Bob's basis angle enters conjugated.
      const double v[3] = {1.0, sb * bob.c, -sb * bob.s};
      double p = 0.0;
      for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) p += u[j] * v[k] * t[j][k];
      }
      out.p[oa ^ alice_flip][ob ^ bob_flip] = 0.25 * p;
    }
  }
  return out;
}

void check_tables(const GameSpec& game, const QubitStrategy& qs) {
  const auto d = static_cast<std::size_t>(game.depth());
  if (qs.alice_angles.size() != game.alice_count() || qs.bob_angles.size() != game.bob_count()) {
    throw std::invalid_argument("quantum strategy: angle tables do not cover the game's questions");
  }
  for (const auto& row : qs.alice_angles) {
    if (row.size() != d) throw std::invalid_argument("quantum strategy: missing Alice angle");
  }
  for (const auto& row : qs.bob_angles) {
    if (row.size() != d) throw std::invalid_argument("quantum strategy: missing Bob angle");
  }
  if ((qs.alice_flip & ~1) != 0 || (qs.bob_flip & ~1) != 0) {
    throw std::invalid_argument("quantum strategy: flips must be 0 or 1");
  }
}

// Evaluates draws with cached per-question directions so that a single
// angle can be varied cheaply.
class Evaluator {
 public:
  Evaluator(const GameSpec& game, const QubitStrategy& qs)
      : game_(game), qs_(qs), t_(correlations(qs.state.amplitudes)), d_(game.depth()) {
    alice_dir_.resize(game.alice_count());
    bob_dir_.resize(game.bob_count());
    for (std::uint32_t x = 0; x < game.alice_count(); ++x) {
      for (double a : qs.alice_angles[x]) alice_dir_[x].push_back({std::cos(a), std::sin(a)});
    }
    for (std::uint32_t y = 0; y < game.bob_count(); ++y) {
      for (double b : qs.bob_angles[y]) bob_dir_[y].push_back({std::cos(b), std::sin(b)});
    }
  }

  QubitStrategy& strategy() { return qs_; }

  void set_alice(std::uint32_t x, int i, double angle) {
    qs_.alice_angles[x][static_cast<std::size_t>(i)] = angle;
    alice_dir_[x][static_cast<std::size_t>(i)] = {std::cos(angle), std::sin(angle)};
  }
  void set_bob(std::uint32_t y, int i, double angle) {
    qs_.bob_angles[y][static_cast<std::size_t>(i)] = angle;
    bob_dir_[y][static_cast<std::size_t>(i)] = {std::cos(angle), std::sin(angle)};
  }

  double draw_probability(std::uint32_t index) const {
    const auto& draw = game_.draws()[index];
    const auto& ad = alice_dir_[draw.alice_q];
    const auto& bd = bob_dir_[draw.bob_q];
    if (game_.is_xor()) {
      double p = 1.0;
      for (int i = 0; i < d_; ++i) {
        const Joint j = joint_answers(t_, ad[static_cast<std::size_t>(i)],
                                      bd[static_cast<std::size_t>(i)], qs_.alice_flip,
                                      qs_.bob_flip);
        const unsigned ti = (draw.target >> i) & 1U;
        p *= ti == 0 ? j.p[0][0] + j.p[1][1] : j.p[0][1] + j.p[1][0];
      }
      return p;
    }
    std::vector<Joint> joints;
    joints.reserve(static_cast<std::size_t>(d_));
    for (int i = 0; i < d_; ++i) {
      joints.push_back(joint_answers(t_, ad[static_cast<std::size_t>(i)],
                                     bd[static_cast<std::size_t>(i)], qs_.alice_flip,
                                     qs_.bob_flip));
    }
    const std::uint32_t k = game_.answer_count();
    double p = 0.0;
    for (std::uint32_t a = 0; a < k; ++a) {
      for (std::uint32_t b = 0; b < k; ++b) {
        if (!game_.wins(draw, a, b)) continue;
        double term = 1.0;
        for (int i = 0; i < d_; ++i) term *= joints[static_cast<std::size_t>(i)].p[(a >> i) & 1U][(b >> i) & 1U];
        p += term;
      }
    }
    return p;
  }

  double total() const {
    double v = 0.0;
    for (std::uint32_t i = 0; i < game_.draws().size(); ++i) {
      v += to_double(game_.draws()[i].weight) * draw_probability(i);
    }
    return v;
  }

 private:
  const GameSpec& game_;
  QubitStrategy qs_;
  Correlations t_;
  int d_;
  std::vector<std::vector<Direction>> alice_dir_;
  std::vector<std::vector<Direction>> bob_dir_;
};

double reduce_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r;
}

}  // namespace

SharedState SharedState::phase_bell(double theta) {
  SharedState s;
  s.theta = reduce_angle(theta);
  const double h = 1.0 / std::sqrt(2.0);
  s.amplitudes << Complex(0, 0), Complex(h, 0), std::polar(h, s.theta), Complex(0, 0);
  return s;
}

SharedState SharedState::from_amplitudes(const Vec4& amplitudes) {
  if (std::abs(amplitudes.squaredNorm() - 1.0) > 1e-12) {
    throw std::invalid_argument("shared state: amplitudes are not normalized");
  }
  SharedState s;
  s.amplitudes = amplitudes;
  s.theta = 0.0;
  return s;
}

Mat2 MeasurementBasis::plus() const {
  Mat2 m;
  m << Complex(0.5, 0), 0.5 * std::polar(1.0, -angle), 0.5 * std::polar(1.0, angle),
      Complex(0.5, 0);
  return m;
}

Mat2 MeasurementBasis::minus() const { return Mat2::Identity() - plus(); }

Mat2 MeasurementBasis::observable() const { return plus() - minus(); }

Mat2 pauli_x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}

Mat2 pauli_y() {
  Mat2 m;
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

Mat2 pauli_z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) out(2 * i + j, 2 * k + l) = a(i, k) * b(j, l);
      }
    }
  }
  return out;
}

double expectation(const SharedState& state, const Mat2& a, const Mat2& b) {
  if (!is_hermitian(a, 1e-10) || !is_hermitian(b, 1e-10)) {
    throw std::invalid_argument("expectation: operators must be Hermitian");
  }
  const Complex e = (state.amplitudes.adjoint() * kron(a, b) * state.amplitudes)(0, 0);
  if (std::abs(e.imag()) > 1e-10) {
    throw std::runtime_error("expectation: imaginary residue above tolerance");
  }
  return e.real();
}

double win_probability(const GameSpec& game, const QubitStrategy& qs) {
  check_tables(game, qs);
  return Evaluator(game, qs).total();
}

QubitStrategy canonical_odd_cycle_strategy(int n, double theta, int d) {
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("canonical strategy: n must be odd and >= 3");
  }
  if (d < 1) throw std::invalid_argument("canonical strategy: d must be >= 1");
  const GameSpec g = game::make_odd_cycle_game(n, d);
  QubitStrategy qs;
  qs.state = SharedState::phase_bell(theta);
  const double nn = n;
  auto alpha = [&](std::uint32_t x) { return kPi * x * (nn - 1) / nn - kPi / (2 * nn); };
  auto beta = [&](std::uint32_t y) { return -kPi * y * (nn - 1) / nn; };
  for (std::uint32_t q = 0; q < g.alice_count(); ++q) {
    std::vector<double> row;
    for (auto c : game::decode_question(q, g.radix(), d)) row.push_back(alpha(c));
    qs.alice_angles.push_back(row);
  }
  for (std::uint32_t q = 0; q < g.bob_count(); ++q) {
    std::vector<double> row;
    for (auto c : game::decode_question(q, g.radix(), d)) row.push_back(beta(c));
    qs.bob_angles.push_back(row);
  }
  double best = -1.0;
  int best_a = 0, best_b = 0;
  for (int fa = 0; fa < 2; ++fa) {
    for (int fb = 0; fb < 2; ++fb) {
      qs.alice_flip = fa;
      qs.bob_flip = fb;
      const double v = win_probability(g, qs);
      if (v > best) {
        best = v;
        best_a = fa;
        best_b = fb;
      }
    }
  }
  qs.alice_flip = best_a;
  qs.bob_flip = best_b;
  return qs;
}

QubitStrategy embed_deterministic(const GameSpec& game, const game::DeterministicStrategy& s,
                                  double theta) {
  if (!game.is_xor()) throw std::invalid_argument("embed_deterministic: XOR games only");
  game::validate_strategy(game, s);
  QubitStrategy qs;
  qs.state = SharedState::phase_bell(theta);
  const int d = game.depth();
  for (auto a : s.alice) {
    std::vector<double> row;
    for (int i = 0; i < d; ++i) row.push_back(kPi * ((a >> i) & 1U));
    qs.alice_angles.push_back(row);
  }
  for (auto b : s.bob) {
    std::vector<double> row;
    for (int i = 0; i < d; ++i) row.push_back(kPi * ((b >> i) & 1U) + qs.state.theta);
    qs.bob_angles.push_back(row);
  }
  return qs;
}

QubitStrategy random_strategy(const GameSpec& game, std::uint64_t seed, double theta) {
  Rng rng = make_rng(seed, 0);
  QubitStrategy qs;
  qs.state = SharedState::phase_bell(theta);
  const auto d = static_cast<std::size_t>(game.depth());
  qs.alice_angles.assign(game.alice_count(), std::vector<double>(d));
  qs.bob_angles.assign(game.bob_count(), std::vector<double>(d));
  for (auto& row : qs.alice_angles) {
    for (auto& a : row) a = kTwoPi * uniform_unit(rng);
  }
  for (auto& row : qs.bob_angles) {
    for (auto& b : row) b = kTwoPi * uniform_unit(rng);
  }
  return qs;
}

namespace {

// One coordinate-ascent pass over a start; returns the final value.
double ascend(const GameSpec& game, Evaluator& ev, unsigned sweeps) {
  const int d = game.depth();
  const auto& draws = game.draws();
  std::vector<double> prob(draws.size());
  std::vector<double> weight(draws.size());
  double total = 0.0;
  for (std::uint32_t i = 0; i < draws.size(); ++i) {
    prob[i] = ev.draw_probability(i);
    weight[i] = to_double(draws[i].weight);
    total += weight[i] * prob[i];
  }
  // The objective restricted to one angle phi is a + b cos(phi) + c sin(phi);
  // three samples pin it down and atan2 gives the maximizer.
  auto step = [&](const std::vector<std::uint32_t>& affected, auto&& set, double current) {
    auto local = [&](double phi) {
      set(phi);
      double s = 0.0;
      for (std::uint32_t i : affected) s += weight[i] * ev.draw_probability(i);
      return s;
    };
    const double base = local(current);
    const double f0 = local(0.0), f1 = local(kPi / 2), f2 = local(kPi);
    const double a = 0.5 * (f0 + f2), b = 0.5 * (f0 - f2), c = f1 - a;
    double phi = current;
    if (std::hypot(b, c) > 0.0) {
      const double cand = reduce_angle(std::atan2(c, b));
      if (a + b * std::cos(cand) + c * std::sin(cand) > base) phi = cand;
    }
    set(phi);
    double s = 0.0;
    for (std::uint32_t i : affected) {
      const double p = ev.draw_probability(i);
      s += weight[i] * p;
      prob[i] = p;
    }
    return s - base;
  };
  for (unsigned sweep = 0; sweep < sweeps; ++sweep) {
    double gained = 0.0;
    for (std::uint32_t x = 0; x < game.alice_count(); ++x) {
      for (int i = 0; i < d; ++i) {
        const double cur = ev.strategy().alice_angles[x][static_cast<std::size_t>(i)];
        gained += step(game.draws_by_alice()[x], [&](double phi) { ev.set_alice(x, i, phi); }, cur);
      }
    }
    for (std::uint32_t y = 0; y < game.bob_count(); ++y) {
      for (int i = 0; i < d; ++i) {
        const double cur = ev.strategy().bob_angles[y][static_cast<std::size_t>(i)];
        gained += step(game.draws_by_bob()[y], [&](double phi) { ev.set_bob(y, i, phi); }, cur);
      }
    }
    total += gained;
    if (gained < 1e-13) break;
  }
  return ev.total();
}

}  // namespace

OptimizeResult optimize_angles(const GameSpec& game, const std::optional<QubitStrategy>& initial,
                               const OptimizeOptions& options) {
  if (options.starts == 0) throw std::invalid_argument("optimize_angles: starts must be >= 1");
  if (initial) check_tables(game, *initial);
  const double theta = initial ? initial->state.theta : 0.0;
  auto start_strategy = [&](unsigned s) {
    if (s == 0 && initial) return *initial;
    QubitStrategy qs = random_strategy(game, derive_seed(options.seed, s), theta);
    if (initial) {
      qs.state = initial->state;
      qs.alice_flip = initial->alice_flip;
      qs.bob_flip = initial->bob_flip;
    }
    return qs;
  };
  std::vector<OptimizeResult> results(options.starts);
  auto run = [&](unsigned s) {
    Evaluator ev(game, start_strategy(s));
    const double v = ascend(game, ev, options.sweeps);
    results[s] = {ev.strategy(), v, s};
  };
  unsigned first = 0;
  if (initial) {
    run(0);
    first = 1;
    // No strategy beats certainty; skipping the other starts keeps the
    // result deterministic.
    if (results[0].value >= 1.0 - 1e-12) return results[0];
  }
  const unsigned threads = options.threads == 0 ? default_threads() : options.threads;
  parallel_ranges(options.starts - first, threads,
                  [&](unsigned, std::uint64_t begin, std::uint64_t end) {
                    for (std::uint64_t s = begin; s < end; ++s) run(first + static_cast<unsigned>(s));
                  });
  std::size_t top = 0;
  for (std::size_t s = 1; s < results.size(); ++s) {
    if (results[s].value > results[top].value) top = s;
  }
  return results[top];
}

BiasReport bias_and_approximality(const GameSpec& game, const QubitStrategy& qs, double epsilon,
                                  std::optional<double> reference_bias) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("bias_and_approximality: epsilon must lie in (0,1)");
  }
  BiasReport r;
  r.win_probability = win_probability(game, qs);
  r.bias = 2.0 * r.win_probability - 1.0;
  if (reference_bias) {
    r.reference_bias = *reference_bias;
  } else {
    r.reference_bias = 2.0 * optimize_angles(game, qs).value - 1.0;
  }
  r.lower = (1.0 - epsilon) * r.reference_bias;
  r.upper = r.reference_bias;
  r.within = r.bias >= r.lower - 1e-12 && r.bias <= r.upper + 1e-12;
  return r;
}

double xor_error_functional(const XorObservables& obs) {
  const std::size_t n = obs.a.size();
  if (n < 2) throw std::invalid_argument("xor_error_functional: need at least two observables");
  if (obs.b.size() != n) throw std::invalid_argument("xor_error_functional: B table must be n x n");
  if (std::abs(obs.state.squaredNorm() - 1.0) > 1e-8) {
    throw std::invalid_argument("xor_error_functional: state is not normalized");
  }
  auto check = [](const Mat2& m) {
    if (!is_hermitian(m, 1e-8) || (m * m - Mat2::Identity()).cwiseAbs().maxCoeff() > 1e-8) {
      throw std::invalid_argument("xor_error_functional: observables must be Hermitian with +-1 spectrum");
    }
  };
  for (const auto& m : obs.a) check(m);
  for (std::size_t i = 0; i < n; ++i) {
    if (obs.b[i].size() != n) throw std::invalid_argument("xor_error_functional: B table must be n x n");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) check(obs.b[i][j]);
    }
  }
  const Mat2 id = Mat2::Identity();
  const double r = 1.0 / std::sqrt(2.0);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec4 plus = kron(r * (obs.a[i] + obs.a[j]), id) * obs.state -
                        kron(id, obs.b[i][j]) * obs.state;
      const Vec4 minus = kron(r * (obs.a[i] - obs.a[j]), id) * obs.state -
                         kron(id, obs.b[j][i]) * obs.state;
      total += plus.squaredNorm() + minus.squaredNorm();
    }
  }
  return total;
}

}  // namespace oddcycle::quantum
