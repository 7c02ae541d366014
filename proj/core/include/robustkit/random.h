// Copyright 2026 The Authors.
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

// Portable seeded random numbers for instance generation.
//
// SplitMix64 as a counter-based generator: the k-th output of a stream with
// seed s is Mix64(s + (k + 1) * 0x9e3779b97f4a7c15), where Mix64 is the
// SplitMix64 finalizer. Integers in [0, bound) come from rejection sampling:
// raw outputs at or above 2^64 - (2^64 mod bound) are discarded and the rest
// reduced modulo bound, so every value is exactly equally likely.

#ifndef ROBUSTKIT_RANDOM_H_
#define ROBUSTKIT_RANDOM_H_

#include <cstdint>
#include <initializer_list>

namespace robustkit {

uint64_t Mix64(uint64_t z);

class SplitMix64 {
 public:
  static constexpr uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  explicit SplitMix64(uint64_t seed) : seed_(seed) {}

  uint64_t Next() { return Mix64(seed_ + (++counter_) * kGamma); }

  // Uniform on [0, bound); bound must be positive.
  uint64_t UniformBelow(uint64_t bound);

  // Uniform on {lo, ..., hi}.
  int64_t UniformInt(int64_t lo, int64_t hi);

  uint64_t counter() const { return counter_; }

 private:
  uint64_t seed_;
  uint64_t counter_ = 0;
};

// h = Mix64(master); then h = Mix64(h ^ Mix64(part + kGamma)) per part.
uint64_t DeriveSeed(uint64_t master, std::initializer_list<uint64_t> parts);

}  // namespace robustkit

#endif  // ROBUSTKIT_RANDOM_H_
