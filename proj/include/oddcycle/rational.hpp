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

#ifndef ODDCYCLE_RATIONAL_HPP_
#define ODDCYCLE_RATIONAL_HPP_

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace oddcycle {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
  return boost::rational_cast<double>(r);
}

// "p/q" form; integers print as "p/1" so the format is uniform.
std::string to_string(const Rational& r);

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace oddcycle

#endif  // ODDCYCLE_RATIONAL_HPP_
