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

#ifndef ODDCYCLE_RNG_HPP_
#define ODDCYCLE_RNG_HPP_

#include <cstdint>
#include <random>

namespace oddcycle {

using Rng = std::mt19937_64;

// SplitMix64 finalizer. Used to derive independent worker streams from a
// master seed: stream k of seed s is seeded with mix(s, k).
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

inline Rng make_rng(std::uint64_t master, std::uint64_t stream) {
  return Rng(derive_seed(master, stream));
}

// Unbiased integer in [0, bound). bound must be positive.
std::uint64_t uniform_index(Rng& rng, std::uint64_t bound);

// Uniform double in [0, 1) from the top 53 bits.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace oddcycle

#endif  // ODDCYCLE_RNG_HPP_
