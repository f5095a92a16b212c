// Copyright 2026 The unibid Authors.
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

#ifndef UNIBID_RNG_H_
#define UNIBID_RNG_H_

#include <cstdint>
#include <limits>

namespace unibid {

// Counter-based generator: the i-th output is the SplitMix64 finalizer
// applied to key + i * golden-gamma, so a (seed, stream) pair replays the same
// sequence on every platform. Satisfies UniformRandomBitGenerator.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  CounterRng(std::uint64_t seed, std::uint64_t stream);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()();
  // Uniform on [0, 1) with 53 random bits.
  double Uniform01();
  // Uniform on [low, high).
  double Uniform(double low, double high);

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t Mix64(std::uint64_t x);

}  // namespace unibid

#endif  // UNIBID_RNG_H_
