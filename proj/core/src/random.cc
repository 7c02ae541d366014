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

#include "robustkit/random.h"

namespace robustkit {

uint64_t Mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t SplitMix64::UniformBelow(uint64_t bound) {
  // 2^64 mod bound, computed without 128-bit arithmetic.
  const uint64_t excess = (0 - bound) % bound;
  for (;;) {
    const uint64_t x = Next();
    if (excess == 0 || x < 0 - excess) return x % bound;
  }
}

int64_t SplitMix64::UniformInt(int64_t lo, int64_t hi) {
  const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  return lo + static_cast<int64_t>(UniformBelow(span));
}

uint64_t DeriveSeed(uint64_t master, std::initializer_list<uint64_t> parts) {
  uint64_t h = Mix64(master);
  for (uint64_t part : parts) h = Mix64(h ^ Mix64(part + SplitMix64::kGamma));
  return h;
}

}  // namespace robustkit
