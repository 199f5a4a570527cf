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

#include "oddcycle/rational.hpp"

#include <stdexcept>

namespace oddcycle {

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      std::int64_t p = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Rational(p);
    }
    std::string ps = text.substr(0, slash), qs = text.substr(slash + 1);
    std::int64_t p = std::stoll(ps, &used);
    if (used != ps.size()) throw std::invalid_argument(text);
    std::int64_t q = std::stoll(qs, &used);
    if (used != qs.size() || q == 0) throw std::invalid_argument(text);
    return Rational(p, q);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
}

}  // namespace oddcycle
