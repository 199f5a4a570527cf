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

#ifndef ODDCYCLE_PARALLEL_HPP_
#define ODDCYCLE_PARALLEL_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace oddcycle {

// Number of worker threads to use when the caller passes 0.
inline unsigned default_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Splits [0, total) into `threads` contiguous chunks and runs body(chunk,
// begin, end) for each. Chunk boundaries depend only on (total, threads), so
// callers that merge per-chunk results in chunk order are deterministic.
inline void parallel_ranges(
    std::uint64_t total, unsigned threads,
    const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& body) {
  if (threads == 0) threads = default_threads();
  threads = static_cast<unsigned>(
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, total)));
  if (threads == 1) {
    body(0, 0, total);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned c = 0; c < threads; ++c) {
    std::uint64_t begin = total * c / threads;
    std::uint64_t end = total * (c + 1) / threads;
    workers.emplace_back([&body, c, begin, end] { body(c, begin, end); });
  }
  for (auto& w : workers) w.join();
}

}  // namespace oddcycle

#endif  // ODDCYCLE_PARALLEL_HPP_
