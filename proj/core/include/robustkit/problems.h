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

// Nominal combinatorial problems min { c x : x in X } and the structural
// quantities the approximation guarantees depend on.

#ifndef ROBUSTKIT_PROBLEMS_H_
#define ROBUSTKIT_PROBLEMS_H_

#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "robustkit/core.h"

namespace robustkit {

// X = { x in {0,1}^n : sum_j x_j = p }.
struct SelectionProblem {
  int n = 0;
  int p = 0;
};

struct Edge {
  int from = 0;
  int to = 0;
};

// Directed graph whose edges are the items; X is the set of simple
// source-sink paths.
class ShortestPathProblem {
 public:
  // Vertices are 0..max id. Throws DomainError if source == sink, a vertex
  // id is negative, or no source-sink path exists.
  ShortestPathProblem(std::vector<Edge> edges, int source, int sink);

  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_vertices() const { return num_vertices_; }
  int source() const { return source_; }
  int sink() const { return sink_; }
  const std::vector<Edge>& edges() const { return edges_; }
  // Edge indices leaving `v`, ascending.
  std::span<const int> out_edges(int v) const { return out_edges_[v]; }

  bool IsAcyclic() const;

 private:
  std::vector<Edge> edges_;
  int source_;
  int sink_;
  int num_vertices_ = 0;
  std::vector<std::vector<int>> out_edges_;
};

class ProblemSpec {
 public:
  // Throws DomainError unless 1 <= p <= n.
  static ProblemSpec Selection(int n, int p);
  static ProblemSpec ShortestPath(std::vector<Edge> edges, int source,
                                  int sink);

  // Dimension of x.
  int num_items() const;

  const SelectionProblem* selection() const {
    return std::get_if<SelectionProblem>(&kind_);
  }
  const ShortestPathProblem* shortest_path() const {
    return std::get_if<ShortestPathProblem>(&kind_);
  }

 private:
  explicit ProblemSpec(std::variant<SelectionProblem, ShortestPathProblem> k)
      : kind_(std::move(k)) {}

  std::variant<SelectionProblem, ShortestPathProblem> kind_;
};

// Returns x(c), a minimizer of c x over X. Deterministic: selection takes
// the p cheapest items with ties broken by index; shortest path runs a
// label-setting search preferring the smallest (vertex, edge) predecessor on
// ties. Throws DomainError if `costs` has the wrong length or a negative
// entry.
BinarySolution NominalSolve(const ProblemSpec& spec,
                            std::span<const double> costs);
inline BinarySolution NominalSolve(const ProblemSpec& spec, const Scenario& c) {
  return NominalSolve(spec, c.values());
}

// Largest k with k <= sum_j x_j for every x in X.
int MinSolutionCardinality(const ProblemSpec& spec);

// An upper bound on |X| = max_{x in X} sum_j x_j. Exact for selection and
// for acyclic graphs; n for graphs with a cycle.
int MaxSolutionCardinalityBound(const ProblemSpec& spec);

// True iff 1 <= k <= MinSolutionCardinality(spec).
bool ValidateK(const ProblemSpec& spec, int k);

bool IsFeasible(const ProblemSpec& spec, const BinarySolution& x);

}  // namespace robustkit

#endif  // ROBUSTKIT_PROBLEMS_H_
