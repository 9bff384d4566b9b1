// Copyright 2026 The FeatForge Authors
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

#ifndef FEATFORGE_RANDOM_H_
#define FEATFORGE_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

namespace featforge {

// Seeded generator with distribution code of our own, so sequences are
// identical across standard library implementations (std::mt19937_64's
// output is specified; the std distributions are not).
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }
  // Uniform integer in [0, n). n must be positive.
  size_t UniformIndex(size_t n);
  // Uniform double in [0, 1) with 53 random bits.
  double Uniform01();
  double Normal(double mean, double stddev);
  bool Bernoulli(double p) { return Uniform01() < p; }
  // Index drawn proportionally to non-negative weights (sum > 0).
  size_t Categorical(std::span<const double> weights);

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[UniformIndex(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finaliser; mixes a master seed with stage indices so that
// independent stages get decorrelated streams.
uint64_t MixSeed(uint64_t seed, std::initializer_list<uint64_t> salt);

}  // namespace featforge

#endif  // FEATFORGE_RANDOM_H_
