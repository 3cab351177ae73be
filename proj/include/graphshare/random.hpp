// Copyright 2026 The graphshare Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <concepts>
#include <cstdint>
#include <random>

#include "graphshare/error.hpp"

namespace graphshare {

// Anything that can draw a uniform integer in [0, bound).
template <typename T>
concept UniformSource = requires(T& source, std::uint32_t bound) {
  { source.Uniform(bound) } -> std::convertible_to<std::uint32_t>;
};

// Seedable generator. Uses the mt19937_64 engine, whose output sequence is
// fixed by the standard, with explicit rejection sampling so that dealings
// are reproducible across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  std::uint32_t Uniform(std::uint32_t bound) {
    if (bound == 0) throw Error(ErrorKind::kInvalidArgument, "empty range");
    const std::uint64_t b = bound;
    const std::uint64_t threshold = (0 - b) % b;
    while (true) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return static_cast<std::uint32_t>(x % b);
    }
  }

  // Independent child stream; advances this generator by one draw.
  Rng Split() { return Rng(engine_() ^ 0x9e3779b97f4a7c15ULL); }

 private:
  std::mt19937_64 engine_;
};

static_assert(UniformSource<Rng>);

}  // namespace graphshare
