// Copyright 2026 The Motivated Equilibrium Authors
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

#ifndef MOTIVATED_RNG_HPP_
#define MOTIVATED_RNG_HPP_

// Counter-based seeding: every stream is keyed by (seed, tag, index) so a
// trial's draws do not depend on how many other trials ran before it.

#include <cmath>
#include <cstdint>
#include <random>

namespace motivated {

inline constexpr std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline constexpr std::uint64_t StreamSeed(std::uint64_t seed, std::uint64_t tag,
                                          std::uint64_t index) {
  return SplitMix64(SplitMix64(SplitMix64(seed) ^ tag) ^ index);
}

// Stream tags.
enum class StreamTag : std::uint64_t {
  kSender = 1,
  kReceiver = 2,
  kReceiverPrior = 3,
  kTrial = 4,
  kDemand = 5,
  kBootstrap = 6,
};

class Rng {
 public:
  Rng(std::uint64_t seed, StreamTag tag, std::uint64_t index)
      : engine_(StreamSeed(seed, static_cast<std::uint64_t>(tag), index)) {}

  double Uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
  bool Bernoulli(double p) { return Uniform() < p; }
  double Normal(double mean, double sd) {
    if (sd == 0.0) return mean;
    return std::normal_distribution<double>(mean, sd)(engine_);
  }
  // Uniform integer in [0, n).
  std::uint64_t Index(std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_);
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace motivated

#endif  // MOTIVATED_RNG_HPP_
