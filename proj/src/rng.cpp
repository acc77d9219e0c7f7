// Copyright 2026 The FenceMask Authors
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

#include "fencemask/rng.hpp"

#include <stdexcept>

namespace fencemask {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed) : root_(seed) {
  // Expand through splitmix so low-entropy seeds (0, 1, ...) still give
  // well-mixed engine state.
  std::uint64_t s = seed;
  engine_.seed(splitmix64(s));
}

Rng Rng::derive(std::initializer_list<std::uint64_t> path) const {
  std::uint64_t s = root_;
  for (std::uint64_t id : path) {
    std::uint64_t mixer = s ^ (id + 0x9e3779b97f4a7c15ull);
    s = splitmix64(mixer);
  }
  return Rng(s);
}

std::uint64_t Rng::next_u64() { return engine_(); }

std::uint64_t Rng::bounded(std::uint64_t n) {
  // Rejection sampling over the top of the range removes modulo bias.
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = next_u64();
    if (r >= threshold) return r % n;
  }
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: lo > hi");
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1u;
  if (span == 0) return static_cast<std::int64_t>(next_u64());  // full range
  return lo + static_cast<std::int64_t>(bounded(span));
}

double Rng::uniform_unit() {
  // 53 mantissa bits; value in [0, 1).
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform_real(double lo, double hi) {
  if (!(lo <= hi)) throw std::invalid_argument("uniform_real: lo > hi");
  return lo + (hi - lo) * uniform_unit();
}

}  // namespace fencemask
