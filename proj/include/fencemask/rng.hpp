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

#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace fencemask {

/// Seeded random stream with fully specified integer and real mappings.
///
/// std::mt19937_64 is bit-reproducible by the standard, but the std
/// distributions are not; this class pins the value mappings so the same
/// seed yields the same draws on every platform. Substreams are derived
/// from the root seed and a tag path, never from engine state, so sibling
/// streams stay independent of each other's consumption.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Independent stream for (root seed, path). Same inputs, same stream.
  Rng derive(std::initializer_list<std::uint64_t> path) const;

  std::uint64_t next_u64();

  /// Uniform integer in [lo, hi], both endpoints included.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// Uniform real in [lo, hi).
  double uniform_real(double lo, double hi);

  /// Uniform real in [0, 1).
  double uniform_unit();

  std::uint64_t root_seed() const { return root_; }

 private:
  std::uint64_t bounded(std::uint64_t n);  // [0, n), rejection sampled

  std::uint64_t root_;
  std::mt19937_64 engine_;
};

/// splitmix64 step; also used as the seed/path mixing function.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace fencemask
