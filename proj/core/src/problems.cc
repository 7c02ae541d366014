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

#include "robustkit/problems.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

namespace robustkit {
namespace {

void CheckCosts(const ProblemSpec& spec, std::span<const double> costs) {
  if (static_cast<int>(costs.size()) != spec.num_items()) {
    throw DomainError("cost vector has length " + std::to_string(costs.size()) +
                      ", expected " + std::to_string(spec.num_items()));
  }
  for (double c : costs) {
    if (!(c >= 0.0) || !std::isfinite(c)) {
      throw DomainError("nominal costs must be nonnegative and finite");
    }
  }
}

BinarySolution SolveSelection(const SelectionProblem& problem,
                              std::span<const double> costs) {
  std::vector<int> order(static_cast<std::size_t>(problem.n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return costs[a] < costs[b]; });
  order.resize(static_cast<std::size_t>(problem.p));
  return BinarySolution(std::move(order), problem.n);
}

BinarySolution SolveShortestPath(const ShortestPathProblem& graph,
                                 std::span<const double> costs) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const int num_vertices = graph.num_vertices();
  std::vector<double> dist(num_vertices, kInf);
  std::vector<int> pred_vertex(num_vertices, -1);
  std::vector<int> pred_edge(num_vertices, -1);
  std::vector<char> done(num_vertices, 0);
  dist[graph.source()] = 0.0;

  // Dense label setting: graphs here are small and the O(V^2) scan keeps the
  // extraction order trivially deterministic.
  for (int round = 0; round < num_vertices; ++round) {
    int u = -1;
    for (int v = 0; v < num_vertices; ++v) {
      if (!done[v] && dist[v] < kInf && (u < 0 || dist[v] < dist[u])) u = v;
    }
    if (u < 0) break;
    done[u] = 1;
    if (u == graph.sink()) break;
    for (int e : graph.out_edges(u)) {
      const int v = graph.edges()[e].to;
      if (done[v]) continue;
      const double candidate = dist[u] + costs[e];
      const bool better = candidate < dist[v];
      const bool tie_preferred =
          candidate == dist[v] &&
          std::pair(u, e) < std::pair(pred_vertex[v], pred_edge[v]);
      if (better || tie_preferred) {
        dist[v] = candidate;
        pred_vertex[v] = u;
        pred_edge[v] = e;
      }
    }
  }
  if (!(dist[graph.sink()] < kInf)) {
    throw DomainError("no source-sink path");
  }
  std::vector<int> path;
  for (int v = graph.sink(); v != graph.source(); v = pred_vertex[v]) {
    path.push_back(pred_edge[v]);
  }
  return BinarySolution(std::move(path), graph.num_edges());
}

// Hop distance from source to every vertex; -1 when unreachable.
std::vector<int> HopDistances(const ShortestPathProblem& graph) {
  std::vector<int> hops(graph.num_vertices(), -1);
  std::deque<int> queue{graph.source()};
  hops[graph.source()] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int e : graph.out_edges(u)) {
      const int v = graph.edges()[e].to;
      if (hops[v] < 0) {
        hops[v] = hops[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return hops;
}

// Kahn's algorithm; empty when the graph has a cycle.
std::vector<int> TopologicalOrder(const ShortestPathProblem& graph) {
  std::vector<int> indegree(graph.num_vertices(), 0);
  for (const Edge& e : graph.edges()) ++indegree[e.to];
  std::deque<int> ready;
  for (int v = 0; v < graph.num_vertices(); ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::vector<int> order;
  while (!ready.empty()) {
    const int u = ready.front();
    ready.pop_front();
    order.push_back(u);
    for (int e : graph.out_edges(u)) {
      if (--indegree[graph.edges()[e].to] == 0) {
        ready.push_back(graph.edges()[e].to);
      }
    }
  }
  if (static_cast<int>(order.size()) != graph.num_vertices()) return {};
  return order;
}

}  // namespace

ShortestPathProblem::ShortestPathProblem(std::vector<Edge> edges, int source,
                                         int sink)
    : edges_(std::move(edges)), source_(source), sink_(sink) {
  if (edges_.empty()) throw DomainError("graph has no edges");
  if (source_ < 0 || sink_ < 0) throw DomainError("negative vertex id");
  if (source_ == sink_) throw DomainError("source equals sink");
  num_vertices_ = std::max(source_, sink_) + 1;
  for (const Edge& e : edges_) {
    if (e.from < 0 || e.to < 0) throw DomainError("negative vertex id");
    num_vertices_ = std::max({num_vertices_, e.from + 1, e.to + 1});
  }
  out_edges_.resize(num_vertices_);
  for (int e = 0; e < num_edges(); ++e) {
    out_edges_[edges_[e].from].push_back(e);
  }
  if (HopDistances(*this)[sink_] < 0) {
    throw DomainError("no path from source to sink");
  }
}

bool ShortestPathProblem::IsAcyclic() const {
  return !TopologicalOrder(*this).empty();
}

ProblemSpec ProblemSpec::Selection(int n, int p) {
  if (n < 1 || p < 1 || p > n) {
    throw DomainError("selection needs 1 <= p <= n, got n=" +
                      std::to_string(n) + " p=" + std::to_string(p));
  }
  return ProblemSpec(SelectionProblem{n, p});
}

ProblemSpec ProblemSpec::ShortestPath(std::vector<Edge> edges, int source,
                                      int sink) {
  return ProblemSpec(ShortestPathProblem(std::move(edges), source, sink));
}

int ProblemSpec::num_items() const {
  if (const auto* s = selection()) return s->n;
  return shortest_path()->num_edges();
}

BinarySolution NominalSolve(const ProblemSpec& spec,
                            std::span<const double> costs) {
  CheckCosts(spec, costs);
  if (const auto* s = spec.selection()) return SolveSelection(*s, costs);
  return SolveShortestPath(*spec.shortest_path(), costs);
}

int MinSolutionCardinality(const ProblemSpec& spec) {
  if (const auto* s = spec.selection()) return s->p;
  const auto& graph = *spec.shortest_path();
  return HopDistances(graph)[graph.sink()];
}

int MaxSolutionCardinalityBound(const ProblemSpec& spec) {
  if (const auto* s = spec.selection()) return s->p;
  const auto& graph = *spec.shortest_path();
  const std::vector<int> order = TopologicalOrder(graph);
  if (order.empty()) return graph.num_edges();
  std::vector<int> longest(graph.num_vertices(), -1);
  longest[graph.source()] = 0;
  for (int u : order) {
    if (longest[u] < 0) continue;
    for (int e : graph.out_edges(u)) {
      const int v = graph.edges()[e].to;
      longest[v] = std::max(longest[v], longest[u] + 1);
    }
  }
  return longest[graph.sink()];
}

bool ValidateK(const ProblemSpec& spec, int k) {
  return k >= 1 && k <= MinSolutionCardinality(spec);
}

bool IsFeasible(const ProblemSpec& spec, const BinarySolution& x) {
  if (!x.selected().empty() && x.selected().back() >= spec.num_items()) {
    return false;
  }
  if (const auto* s = spec.selection()) return x.size() == s->p;
  const auto& graph = *spec.shortest_path();
  // Follow the unique selected out-edge from the source; a simple path uses
  // every selected edge exactly once and never revisits a vertex.
  std::vector<char> visited(graph.num_vertices(), 0);
  int v = graph.source();
  visited[v] = 1;
  int used = 0;
  while (v != graph.sink()) {
    int next_edge = -1;
    for (int e : graph.out_edges(v)) {
      if (x.contains(e)) {
        if (next_edge >= 0) return false;
        next_edge = e;
      }
    }
    if (next_edge < 0) return false;
    ++used;
    v = graph.edges()[next_edge].to;
    if (visited[v]) return false;
    visited[v] = 1;
  }
  return used == x.size();
}

}  // namespace robustkit
