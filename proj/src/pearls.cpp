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

#include "oddcycle/pearls.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "oddcycle/torus.hpp"

namespace oddcycle::pearls {

namespace {

std::uint64_t question_count(int n, int d) {
  std::uint64_t c = 1;
  for (int i = 0; i < d; ++i) c *= static_cast<std::uint64_t>(n);
  return c;
}

void check_params(int n, int d) {
  if (n < 3) throw std::invalid_argument("pearls: n must be >= 3");
  if (d < 1) throw std::invalid_argument("pearls: d must be >= 1");
  if (d > kMaxRegionDepth) {
    throw std::invalid_argument("pearls: d = " + std::to_string(d) + " exceeds the cap of " +
                                std::to_string(kMaxRegionDepth));
  }
}

void check_table(const AliceTable& alice, int n, int d) {
  if (alice.size() != question_count(n, d)) {
    throw std::invalid_argument("pearls: Alice table is not total over [n]^d");
  }
  const std::uint32_t limit = 1U << d;
  for (auto a : alice) {
    if (a >= limit) throw std::invalid_argument("pearls: answer outside [2]^d");
  }
}

int coord(std::uint32_t x, int i, int n) {
  for (int k = 0; k < i; ++k) x /= static_cast<std::uint32_t>(n);
  return static_cast<int>(x % static_cast<std::uint32_t>(n));
}

}  // namespace

std::vector<std::uint32_t> q_set(std::uint32_t y, int n, int d) {
  check_params(n, d);
  if (y >= question_count(n, d)) throw std::invalid_argument("q_set: y outside [n]^d");
  std::vector<std::uint32_t> out;
  for (std::uint32_t t = 0; t < (1U << d); ++t) {
    std::uint32_t x = 0, stride = 1, rest = y;
    for (int i = 0; i < d; ++i) {
      const int c = static_cast<int>(rest % static_cast<std::uint32_t>(n));
      rest /= static_cast<std::uint32_t>(n);
      const int shifted = (c - static_cast<int>((t >> i) & 1U) + n) % n;
      x += static_cast<std::uint32_t>(shifted) * stride;
      stride *= static_cast<std::uint32_t>(n);
    }
    out.push_back(x);
  }
  return out;
}

bool region_consistent(const AliceTable& alice, const std::vector<std::uint32_t>& members, int n, int d) {
  check_params(n, d);
  for (std::size_t p = 0; p < members.size(); ++p) {
    for (std::size_t q = p + 1; q < members.size(); ++q) {
      const std::uint32_t x = members[p], xp = members[q];
      for (int i = 0; i < d; ++i) {
        const unsigned bits = ((alice[x] >> i) ^ (alice[xp] >> i)) & 1U;
        const int diff = torus::wrapped_difference(coord(xp, i, n), coord(x, i, n), n);
        if (bits != static_cast<unsigned>(diff & 1)) return false;
      }
    }
  }
  return true;
}

ConsistentRegion max_consistent_region(const AliceTable& alice, std::uint32_t y, int n, int d) {
  check_params(n, d);
  check_table(alice, n, d);
  const auto q = q_set(y, n, d);
  std::map<std::uint32_t, std::vector<std::uint32_t>> classes;
  for (std::uint32_t t = 0; t < q.size(); ++t) classes[alice[q[t]] ^ t].push_back(q[t]);
  ConsistentRegion best{y, {}};
  for (auto& [key, members] : classes) {
    std::sort(members.begin(), members.end());
    if (members.size() > best.members.size() ||
        (members.size() == best.members.size() && members < best.members)) {
      best.members = members;
    }
  }
  return best;
}

Pearl build_pearl(const AliceTable& alice, int n, int d) {
  check_params(n, d);
  check_table(alice, n, d);
  Pearl p;
  const auto count = static_cast<std::uint32_t>(question_count(n, d));
  for (std::uint32_t y = 0; y < count; ++y) p.regions.push_back(max_consistent_region(alice, y, n, d));
  p.consistent = true;
  return p;
}

bool pearl_well_formed(const Pearl& pearl, const AliceTable& alice, int n, int d,
                       bool require_consistent) {
  check_params(n, d);
  check_table(alice, n, d);
  if (pearl.regions.size() != question_count(n, d)) return false;
  for (std::uint32_t y = 0; y < pearl.regions.size(); ++y) {
    auto q = q_set(y, n, d);
    std::sort(q.begin(), q.end());
    const auto& members = pearl.regions[y].members;
    if (!std::includes(q.begin(), q.end(), members.begin(), members.end())) return false;
    if (require_consistent && !region_consistent(alice, members, n, d)) return false;
  }
  return true;
}

Rational value_via_regions(const AliceTable& alice, int n, int d) {
  check_params(n, d);
  check_table(alice, n, d);
  const auto count = question_count(n, d);
  std::int64_t total = 0;
  for (std::uint32_t y = 0; y < count; ++y) {
    total += static_cast<std::int64_t>(max_consistent_region(alice, y, n, d).members.size());
  }
  return Rational(total, static_cast<std::int64_t>(count) << d);
}

}  // namespace oddcycle::pearls
