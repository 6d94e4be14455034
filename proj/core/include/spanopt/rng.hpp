// Copyright 2026 The spanopt Authors
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

#ifndef SPANOPT_RNG_HPP_
#define SPANOPT_RNG_HPP_

#include <cstdint>
#include <random>

namespace spanopt {

using Seed = std::uint64_t;

// One splitmix64 step; advances state.
std::uint64_t SplitMix64(std::uint64_t& state);

// Independent child seed for a numbered sub-stream of parent.
Seed DeriveSeed(Seed parent, std::uint64_t stream);

// Deterministic generator; identical seeds give identical streams on every
// platform (no std distributions are involved).
class Rng {
 public:
  explicit Rng(Seed seed) : seed_(seed), engine_(seed) {}

  Seed seed() const { return seed_; }
  std::uint64_t Next() { return engine_(); }
  // Uniform in [0, 1) with 53 random bits.
  double Uniform01() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }
  // Uniform integer in [lo, hi].
  int UniformInt(int lo, int hi);

 private:
  Seed seed_;
  std::mt19937_64 engine_;
};

}  // namespace spanopt

#endif  // SPANOPT_RNG_HPP_
