// Copyright 2026 The graphshare Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Brute-force ground truth for coloring questions on small graphs.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "graphshare/error.hpp"
#include "graphshare/graph.hpp"

namespace graphshare::oracle {

struct Limits {
  std::size_t max_vertices = kDefaultExhaustiveGuard;
};

inline void CheckGuard(std::size_t size, const Limits& limits, const char* what) {
  if (size > limits.max_vertices) {
    throw Error(ErrorKind::kGuardExceeded,
                std::string(what) + " has " + std::to_string(size) +
                    " vertices, exhaustive guard is " +
                    std::to_string(limits.max_vertices));
  }
}

// Calls `visit(colors)` for every proper map V -> Z_n in lexicographic order
// (vertex 1 most significant). `visit` may return false to stop early.
// Returns the number of colorings visited.
template <typename Visitor>
std::size_t ForEachProperColoring(const Graph& g, int n, Visitor&& visit,
                                  const Limits& limits = {}) {
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "need at least one color");
  CheckGuard(g.num_vertices(), limits, "graph");
  const std::size_t m = g.num_vertices();
  if (m == 0) throw Error(ErrorKind::kInvalidArgument, "empty graph");
  std::vector<int> colors(m, -1);
  std::size_t visited = 0;
  std::size_t v = 0;
  while (true) {
    // Advance vertex v to its next color consistent with earlier vertices.
    int next = colors[v] + 1;
    for (; next < n; ++next) {
      bool ok = true;
      for (Vertex w : g.Neighbors(v)) {
        if (w < v && colors[w] == next) {
          ok = false;
          break;
        }
      }
      if (ok) break;
    }
    if (next < n) {
      colors[v] = next;
      if (v + 1 == m) {
        ++visited;
        bool keep_going = true;
        if constexpr (std::is_same_v<std::invoke_result_t<Visitor&, const std::vector<int>&>,
                                     bool>) {
          keep_going = visit(static_cast<const std::vector<int>&>(colors));
        } else {
          visit(static_cast<const std::vector<int>&>(colors));
        }
        if (!keep_going) return visited;
      } else {
        ++v;
      }
    } else {
      colors[v] = -1;
      if (v == 0) return visited;
      --v;
    }
  }
}

inline std::vector<Coloring> EnumerateProperColorings(const Graph& g, int n,
                                                      const Limits& limits = {}) {
  std::vector<Coloring> out;
  ForEachProperColoring(
      g, n, [&](const std::vector<int>& colors) { out.emplace_back(n, colors); },
      limits);
  return out;
}

inline bool HasProperColoring(const Graph& g, int n, const Limits& limits = {}) {
  return ForEachProperColoring(
             g, n, [](const std::vector<int>&) { return false; }, limits) > 0;
}

inline int ChromaticNumber(const Graph& g, const Limits& limits = {}) {
  CheckGuard(g.num_vertices(), limits, "graph");
  for (int n = 1;; ++n) {
    if (HasProperColoring(g, n, limits)) return n;
  }
}

// n minus the number of distinct colors on the neighbors of v.
inline int DegreeOfFreedom(const Graph& g, const Coloring& c, Vertex v, int n) {
  if (!ValidateColoring(g, c)) {
    throw Error(ErrorKind::kInvalidArgument, "coloring is not proper");
  }
  if (v >= g.num_vertices()) {
    throw Error(ErrorKind::kInvalidArgument, "vertex out of range");
  }
  std::vector<int> seen;
  for (Vertex w : g.Neighbors(v)) {
    if (c[w] >= n) {
      throw Error(ErrorKind::kInvalidArgument,
                  "color of " + VertexLabel(w) + " outside Z_" + std::to_string(n));
    }
    seen.push_back(c[w]);
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  return n - static_cast<int>(seen.size());
}

using PartialColoring = std::vector<std::optional<int>>;

struct Propagation {
  PartialColoring colors;
  bool conflict = false;
};

// Fixpoint propagation restricted to `scope`: repeatedly color any uncolored
// scope vertex whose colored neighbors leave exactly one of the n colors.
// A vertex left with no color, or two adjacent seeds sharing a color, is a
// conflict.
inline Propagation Propagate(const Graph& g, const std::vector<Vertex>& scope,
                             PartialColoring seeds, int n) {
  Propagation out{std::move(seeds), false};
  auto& colors = out.colors;
  for (const auto& [u, v] : g.edges()) {
    if (colors[u] && colors[v] && *colors[u] == *colors[v]) {
      out.conflict = true;
      return out;
    }
  }
  std::vector<char> excluded(static_cast<std::size_t>(n));
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v : scope) {
      if (colors[v]) continue;
      std::fill(excluded.begin(), excluded.end(), 0);
      for (Vertex w : g.Neighbors(v)) {
        if (colors[w] && *colors[w] >= 0 && *colors[w] < n) excluded[*colors[w]] = 1;
      }
      int available = 0;
      int last = -1;
      for (int s = 0; s < n; ++s) {
        if (!excluded[s]) {
          ++available;
          last = s;
        }
      }
      if (available == 0) {
        out.conflict = true;
        return out;
      }
      if (available == 1) {
        colors[v] = last;
        changed = true;
      }
    }
  }
  return out;
}

// True iff propagating c restricted to `subset` over `type1` colors every
// type1 vertex exactly as c does.
inline bool Determines(const Graph& g, const std::vector<Vertex>& subset,
                       const Coloring& c, const std::vector<Vertex>& type1, int n) {
  PartialColoring seeds(g.num_vertices());
  for (Vertex v : subset) seeds[v] = c[v];
  const Propagation p = Propagate(g, type1, std::move(seeds), n);
  if (p.conflict) return false;
  return std::all_of(type1.begin(), type1.end(), [&](Vertex v) {
    return p.colors[v] && *p.colors[v] == c[v];
  });
}

// Minimum-cardinality subset of type1 (lexicographically smallest among
// ties) that determines c on type1. Exhaustive over subsets by size.
inline std::vector<Vertex> MinDeterminingSet(const Graph& g, std::vector<Vertex> type1,
                                             const Coloring& c, int n,
                                             const Limits& limits = {}) {
  CheckGuard(type1.size(), limits, "type I vertex set");
  std::sort(type1.begin(), type1.end());
  const std::size_t total = type1.size();
  for (std::size_t size = 0; size <= total; ++size) {
    // Index combinations in lexicographic order.
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::vector<Vertex> subset;
      for (std::size_t i : idx) subset.push_back(type1[i]);
      if (Determines(g, subset, c, type1, n)) return subset;
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == total - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw Error(ErrorKind::kInvalidArgument,
              "no determining subset: coloring is inconsistent on type I vertices");
}

}  // namespace graphshare::oracle
