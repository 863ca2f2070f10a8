// Copyright 2026 The Dueling Algorithms Authors
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


#ifndef DUELING_RNG_H_
#define DUELING_RNG_H_

#include <cstdint>
#include <vector>

namespace dueling {

// Counter-based generator: the i-th output is a fixed hash of (key, i), so
// streams are reproducible on every platform and can be split by index
// without sharing state. The mixer is the SplitMix64 finalizer.
class CounterRng {
 public:
  explicit CounterRng(uint64_t seed) : key_(Mix(seed ^ 0x6a09e667f3bcc909ULL)) {}

  // Independent stream for sub-task `index` (trial, sample, oracle call).
  CounterRng Split(uint64_t index) const {
    CounterRng child(0);
    child.key_ = Mix(key_ + Mix(index + 0x9e3779b97f4a7c15ULL));
    return child;
  }

  uint64_t NextU64() { return Mix(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

  // Uniform on [0, 1) with 53 random bits.
  double Uniform() { return static_cast<double>(NextU64() >> 11) * 0x1.0p-53; }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Uniform on {0, ..., bound-1}; rejection sampling keeps it unbiased.
  uint64_t UniformInt(uint64_t bound);

  // Index drawn proportionally to nonnegative weights. Falls back to a
  // uniform index when every weight is zero.
  int Categorical(const std::vector<double>& weights);

  // Uniformly random permutation of {0, ..., n-1} (Fisher-Yates).
  std::vector<int> Permutation(int n);

  uint64_t counter() const { return counter_; }

  static uint64_t Mix(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  uint64_t key_;
  uint64_t counter_ = 0;
};

}  // namespace dueling

#endif  // DUELING_RNG_H_
