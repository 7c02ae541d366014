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

// Text instance format, one directive per line, '#' starts a comment:
//
//   # robust-instance v1
//   problem selection            problem shortestpath
//   n 4                          edges 3
//   p 2                          edge 0 0 1
//                                edge 1 1 2
//                                edge 2 0 2
//                                source 0
//                                sink 2
//   N 3                          N 3
//   c 5 5 3 3                    c 1 2 3
//   ...                          ...

#ifndef ROBUSTKIT_INSTANCE_IO_H_
#define ROBUSTKIT_INSTANCE_IO_H_

#include <string>
#include <string_view>

#include "robustkit/core.h"
#include "robustkit/problems.h"

namespace robustkit {

struct Instance {
  UncertaintySet uncertainty;
  ProblemSpec problem;
};

// Throws ParseError (with the offending line) on syntax errors, dimension
// mismatches and negative costs.
Instance ParseInstance(std::string_view text);

// Canonical text. Values use the shortest decimal form that round-trips, so
// ParseInstance(SerializeInstance(...)) reproduces every cost bit-exactly.
std::string SerializeInstance(const UncertaintySet& u,
                              const ProblemSpec& problem);

Instance ReadInstanceFile(const std::string& path);

// Shortest round-trip decimal representation ("5", "3.75", "inf").
std::string FormatShortest(double value);

// Fixed significant-digit formatting, locale independent ("%.6g" style).
std::string FormatSignificant(double value, int digits = 6);

}  // namespace robustkit

#endif  // ROBUSTKIT_INSTANCE_IO_H_
