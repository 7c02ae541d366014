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

#include "robustkit/instance_io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <system_error>
#include <utility>
#include <vector>

namespace robustkit {
namespace {

std::vector<std::string_view> SplitWords(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

long long ParseInteger(std::string_view word, int line) {
  long long value = 0;
  auto [ptr, ec] =
      std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    throw ParseError(line,
                     "expected an integer, got '" + std::string(word) + "'");
  }
  return value;
}

double ParseCost(std::string_view word, int line) {
  double value = 0.0;
  auto [ptr, ec] =
      std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size() ||
      !std::isfinite(value)) {
    throw ParseError(
        line, "expected a finite decimal, got '" + std::string(word) + "'");
  }
  if (value < 0.0) {
    throw ParseError(line, "negative cost " + std::string(word));
  }
  return value;
}

int ParseCount(const std::vector<std::string_view>& words, int line) {
  if (words.size() != 2) {
    throw ParseError(line, "'" + std::string(words[0]) + "' takes one integer");
  }
  const long long v = ParseInteger(words[1], line);
  if (v < 0 || v > 100'000'000) {
    throw ParseError(line,
                     "value out of range for '" + std::string(words[0]) + "'");
  }
  return static_cast<int>(v);
}

}  // namespace

Instance ParseInstance(std::string_view text) {
  enum class Kind { kUnset, kSelection, kShortestPath };
  Kind kind = Kind::kUnset;
  std::optional<int> n, p, num_scenarios, num_edges, source, sink;
  std::vector<std::optional<Edge>> edges;
  std::vector<std::vector<double>> rows;
  int row_line = 0;

  int line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto words = SplitWords(line);
    if (words.empty()) continue;
    const std::string_view key = words[0];

    auto set_once = [&](std::optional<int>& slot, int value) {
      if (slot)
        throw ParseError(line_number, "duplicate '" + std::string(key) + "'");
      slot = value;
    };

    if (key == "problem") {
      if (words.size() != 2)
        throw ParseError(line_number, "'problem' takes one word");
      if (kind != Kind::kUnset)
        throw ParseError(line_number, "duplicate 'problem'");
      if (words[1] == "selection") {
        kind = Kind::kSelection;
      } else if (words[1] == "shortestpath") {
        kind = Kind::kShortestPath;
      } else {
        throw ParseError(line_number,
                         "unknown problem '" + std::string(words[1]) + "'");
      }
    } else if (key == "n") {
      set_once(n, ParseCount(words, line_number));
    } else if (key == "p") {
      set_once(p, ParseCount(words, line_number));
    } else if (key == "N") {
      set_once(num_scenarios, ParseCount(words, line_number));
    } else if (key == "edges") {
      set_once(num_edges, ParseCount(words, line_number));
      edges.assign(static_cast<std::size_t>(*num_edges), std::nullopt);
    } else if (key == "source") {
      set_once(source, ParseCount(words, line_number));
    } else if (key == "sink") {
      set_once(sink, ParseCount(words, line_number));
    } else if (key == "edge") {
      if (!num_edges) throw ParseError(line_number, "'edge' before 'edges'");
      if (words.size() != 4)
        throw ParseError(line_number, "'edge' takes <idx> <from> <to>");
      const long long idx = ParseInteger(words[1], line_number);
      const long long from = ParseInteger(words[2], line_number);
      const long long to = ParseInteger(words[3], line_number);
      if (idx < 0 || idx >= *num_edges)
        throw ParseError(line_number, "edge index out of range");
      if (from < 0 || to < 0 || from > 100'000'000 || to > 100'000'000) {
        throw ParseError(line_number, "vertex id out of range");
      }
      if (edges[idx]) throw ParseError(line_number, "duplicate edge index");
      edges[idx] = Edge{static_cast<int>(from), static_cast<int>(to)};
    } else if (key == "c") {
      const std::optional<int> dim =
          kind == Kind::kShortestPath ? num_edges : n;
      if (!dim)
        throw ParseError(line_number, "cost row before the dimension is known");
      if (static_cast<int>(words.size()) - 1 != *dim) {
        throw ParseError(line_number, "dimension mismatch: cost row has " +
                                          std::to_string(words.size() - 1) +
                                          " entries, expected " +
                                          std::to_string(*dim));
      }
      std::vector<double> row;
      row.reserve(words.size() - 1);
      for (std::size_t w = 1; w < words.size(); ++w) {
        row.push_back(ParseCost(words[w], line_number));
      }
      rows.push_back(std::move(row));
      row_line = line_number;
    } else {
      throw ParseError(line_number,
                       "unknown directive '" + std::string(key) + "'");
    }
  }

  if (kind == Kind::kUnset) throw ParseError(0, "missing 'problem' directive");
  if (!num_scenarios) throw ParseError(0, "missing 'N' directive");
  if (static_cast<int>(rows.size()) != *num_scenarios) {
    throw ParseError(
        row_line,
        "dimension mismatch: found " + std::to_string(rows.size()) +
            " cost rows, expected N = " + std::to_string(*num_scenarios));
  }
  try {
    if (kind == Kind::kSelection) {
      if (!n || !p) throw ParseError(0, "selection needs 'n' and 'p'");
      if (num_edges || source || sink)
        throw ParseError(0, "graph directives in a selection instance");
      ProblemSpec spec = ProblemSpec::Selection(*n, *p);
      return Instance{UncertaintySet(std::move(rows)), std::move(spec)};
    }
    if (!num_edges || !source || !sink) {
      throw ParseError(0, "shortestpath needs 'edges', 'source' and 'sink'");
    }
    if (n || p) throw ParseError(0, "'n'/'p' in a shortestpath instance");
    std::vector<Edge> graph_edges;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (!edges[e])
        throw ParseError(0, "edge " + std::to_string(e) + " is missing");
      graph_edges.push_back(*edges[e]);
    }
    ProblemSpec spec =
        ProblemSpec::ShortestPath(std::move(graph_edges), *source, *sink);
    return Instance{UncertaintySet(std::move(rows)), std::move(spec)};
  } catch (const DomainError& e) {
    throw ParseError(0, e.what());
  }
}

std::string SerializeInstance(const UncertaintySet& u,
                              const ProblemSpec& problem) {
  if (u.num_items() != problem.num_items()) {
    throw DomainError("uncertainty set and problem disagree on n");
  }
  std::ostringstream out;
  out << "# robust-instance v1\n";
  if (const auto* s = problem.selection()) {
    out << "problem selection\n"
        << "n " << s->n << "\n"
        << "p " << s->p << "\n";
  } else {
    const auto& graph = *problem.shortest_path();
    out << "problem shortestpath\n"
        << "edges " << graph.num_edges() << "\n";
    for (int e = 0; e < graph.num_edges(); ++e) {
      out << "edge " << e << " " << graph.edges()[e].from << " "
          << graph.edges()[e].to << "\n";
    }
    out << "source " << graph.source() << "\n"
        << "sink " << graph.sink() << "\n";
  }
  out << "N " << u.num_scenarios() << "\n";
  for (int i = 0; i < u.num_scenarios(); ++i) {
    out << "c";
    for (double v : u.scenario(i)) out << " " << FormatShortest(v);
    out << "\n";
  }
  return out.str();
}

Instance ReadInstanceFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

std::string FormatShortest(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string FormatSignificant(double value, int digits) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, digits);
  return std::string(buf, ptr);
}

}  // namespace robustkit
