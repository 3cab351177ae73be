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


// Graphs used across the test suites: the worked examples, an
// isomorphism-free enumeration of all small graphs, and random generators.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "graphshare/graph.hpp"
#include "graphshare/random.hpp"

namespace graphshare::testing {

inline Graph FromOneBased(std::size_t m, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(m);
  for (auto [u, v] : edges) g.AddEdge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  return g;
}

// 4 vertices, colors (0,0,2,1) over Z_3.
inline Graph Example1Graph() { return FromOneBased(4, {{1, 3}, {1, 4}, {2, 3}, {3, 4}}); }
inline Coloring Example1Coloring() { return Coloring(3, {0, 0, 2, 1}); }

// v4 adjacent only to v1.
inline Graph Example2Graph() { return FromOneBased(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}}); }

// v5 is a slack vertex.
inline Graph Example3Graph() {
  return FromOneBased(6, {{1, 2}, {1, 6}, {2, 3}, {2, 4}, {2, 6}, {3, 4}, {4, 5}, {5, 6}});
}
inline Coloring Example3FirstColoring() { return Coloring(3, {0, 1, 2, 0, 1, 2}); }
inline Coloring Example3SecondColoring() { return Coloring(3, {0, 1, 0, 2, 0, 2}); }

// Reduces to v1 v2 v3.
inline Graph Example4Graph() {
  return FromOneBased(6, {{1, 2}, {1, 3}, {1, 4}, {1, 6}, {2, 3}, {2, 4}, {2, 5}, {3, 5}, {3, 6}});
}
inline Coloring Example4Coloring() { return Coloring(3, {0, 1, 2, 2, 0, 1}); }

inline constexpr const char* kExample5Code = "010011000100100001101000000152256565";

// Same graph, written out from the adjacency matrix.
inline Graph Example5Graph() {
  return FromOneBased(8, {{1, 3}, {2, 4}, {3, 4}, {3, 6}, {3, 7}, {4, 5}, {4, 7}, {6, 7}, {7, 8}});
}
inline Coloring Example5Coloring() { return Coloring(10, {5, 2, 2, 5, 6, 5, 6, 5}); }
inline Coloring Example5ColoringZ3() { return Coloring(3, {1, 0, 0, 1, 2, 1, 2, 1}); }

// Small graphs as adjacency bitmasks (bit j of rows[i] <=> edge i-j).
struct SmallGraph {
  std::vector<std::uint16_t> rows;

  Graph ToGraph() const {
    Graph g(rows.size());
    for (Vertex i = 0; i < rows.size(); ++i)
      for (Vertex j = i + 1; j < rows.size(); ++j)
        if (rows[i] >> j & 1) g.AddEdge(i, j);
    return g;
  }
};

namespace internal {

inline std::uint64_t UpperTriangleCode(const SmallGraph& g, const std::vector<int>& order) {
  std::uint64_t code = 0;
  const std::size_t m = order.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      code = code << 1 | (g.rows[order[i]] >> order[j] & 1);
  return code;
}

// Equitable-partition refinement starting from degrees; isomorphism invariant.
inline std::vector<int> RefinedColors(const SmallGraph& g) {
  const std::size_t m = g.rows.size();
  std::vector<int> color(m);
  for (std::size_t v = 0; v < m; ++v) color[v] = __builtin_popcount(g.rows[v]);
  while (true) {
    std::vector<std::vector<int>> signature(m);
    for (std::size_t v = 0; v < m; ++v) {
      signature[v].push_back(color[v]);
      std::vector<int> nb;
      for (std::size_t w = 0; w < m; ++w)
        if (g.rows[v] >> w & 1) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      signature[v].insert(signature[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> distinct = signature;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> next(m);
    for (std::size_t v = 0; v < m; ++v)
      next[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), signature[v]) -
                                 distinct.begin());
    const auto cells = [](const std::vector<int>& c) {
      return std::set<int>(c.begin(), c.end()).size();
    };
    if (cells(next) == cells(color)) return next;
    color = std::move(next);
  }
}

}  // namespace internal

// Minimum upper-triangle code over all vertex orders compatible with the
// refined partition. Two graphs are isomorphic iff their codes are equal.
inline std::uint64_t CanonicalCode(const SmallGraph& g) {
  const std::size_t m = g.rows.size();
  const std::vector<int> color = internal::RefinedColors(g);
  std::vector<std::vector<int>> cells(m);
  for (std::size_t v = 0; v < m; ++v) cells[color[v]].push_back(static_cast<int>(v));
  std::erase_if(cells, [](const auto& c) { return c.empty(); });
  std::uint64_t best = ~std::uint64_t{0};
  // Odometer over the permutations of every cell.
  std::vector<std::vector<int>> perms = cells;
  while (true) {
    std::vector<int> order;
    for (const auto& c : perms) order.insert(order.end(), c.begin(), c.end());
    best = std::min(best, internal::UpperTriangleCode(g, order));
    std::size_t i = 0;
    for (; i < perms.size(); ++i) {
      if (std::next_permutation(perms[i].begin(), perms[i].end())) break;
    }
    if (i == perms.size()) break;
  }
  return best;
}

// One representative per isomorphism class of graphs on exactly m vertices.
inline std::vector<SmallGraph> AllGraphsOn(std::size_t m) {
  std::vector<SmallGraph> level{SmallGraph{{0}}};
  for (std::size_t size = 2; size <= m; ++size) {
    std::set<std::uint64_t> seen;
    std::vector<SmallGraph> next;
    for (const SmallGraph& base : level) {
      for (std::uint32_t nb = 0; nb < (1u << (size - 1)); ++nb) {
        SmallGraph g = base;
        g.rows.push_back(static_cast<std::uint16_t>(nb));
        for (std::size_t i = 0; i + 1 < size; ++i)
          if (nb >> i & 1) g.rows[i] |= static_cast<std::uint16_t>(1u << (size - 1));
        if (seen.insert(CanonicalCode(g)).second) next.push_back(std::move(g));
      }
    }
    level = std::move(next);
  }
  return level;
}

inline Graph RandomGraph(Rng& rng, std::size_t m, std::uint32_t edge_percent) {
  Graph g(m);
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = u + 1; v < m; ++v)
      if (rng.Uniform(100) < edge_percent) g.AddEdge(u, v);
  return g;
}

// Planted 3-partite graph; returns the graph, the planted coloring is proper.
inline Graph RandomThreeColorable(Rng& rng, std::size_t m, std::uint32_t edge_percent,
                                  std::vector<int>* planted = nullptr) {
  std::vector<int> colors(m);
  for (auto& c : colors) c = static_cast<int>(rng.Uniform(3));
  Graph g(m);
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = u + 1; v < m; ++v)
      if (colors[u] != colors[v] && rng.Uniform(100) < edge_percent) g.AddEdge(u, v);
  if (planted) *planted = colors;
  return g;
}

}  // namespace graphshare::testing
