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


#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "graphshare/error.hpp"

namespace graphshare {

// Vertices are 0-based in the library API. Documents and diagnostics print
// them 1-based.
using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

inline std::string VertexLabel(Vertex v) { return "v" + std::to_string(v + 1); }

// Simple undirected graph. Edges are stored once as (min, max).
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t num_vertices)
      : num_vertices_(num_vertices), adjacency_(num_vertices) {
    if (num_vertices == 0) {
      throw Error(ErrorKind::kInvalidArgument, "graph needs at least one vertex");
    }
  }

  Graph(std::size_t num_vertices, const std::vector<Edge>& edges)
      : Graph(num_vertices) {
    for (const auto& [u, v] : edges) AddEdge(u, v);
  }

  // Adding an edge twice is a no-op.
  void AddEdge(Vertex u, Vertex v) {
    if (u >= num_vertices_ || v >= num_vertices_) {
      throw Error(ErrorKind::kInvalidArgument,
                  "edge endpoint out of range: (" + std::to_string(u + 1) +
                      "," + std::to_string(v + 1) + ")");
    }
    if (u == v) {
      throw Error(ErrorKind::kInvalidArgument,
                  "self-loop at " + VertexLabel(u));
    }
    if (u > v) std::swap(u, v);
    if (edges_.insert({u, v}).second) {
      InsertSorted(adjacency_[u], v);
      InsertSorted(adjacency_[v], u);
    }
  }

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::set<Edge>& edges() const { return edges_; }

  bool HasEdge(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    return edges_.count({u, v}) > 0;
  }

  // Sorted ascending.
  const std::vector<Vertex>& Neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t Degree(Vertex v) const { return adjacency_.at(v).size(); }

  std::size_t MaxDegree() const {
    std::size_t d = 0;
    for (const auto& adj : adjacency_) d = std::max(d, adj.size());
    return d;
  }

  bool IsComplete() const {
    return edges_.size() == num_vertices_ * (num_vertices_ - 1) / 2;
  }

  // Subgraph induced by `vertices` (ascending). Vertex i of the result is
  // vertices[i].
  Graph Induced(const std::vector<Vertex>& vertices) const {
    Graph sub(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < vertices.size(); ++j) {
        if (HasEdge(vertices[i], vertices[j])) sub.AddEdge(i, j);
      }
    }
    return sub;
  }

  // Connected components, each ascending; components ordered by smallest member.
  std::vector<std::vector<Vertex>> Components() const {
    std::vector<int> seen(num_vertices_, 0);
    std::vector<std::vector<Vertex>> out;
    for (Vertex start = 0; start < num_vertices_; ++start) {
      if (seen[start]) continue;
      std::vector<Vertex> comp{start};
      seen[start] = 1;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        for (Vertex w : adjacency_[comp[i]]) {
          if (!seen[w]) {
            seen[w] = 1;
            comp.push_back(w);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_;
  }

 private:
  static void InsertSorted(std::vector<Vertex>& list, Vertex v) {
    list.insert(std::upper_bound(list.begin(), list.end(), v), v);
  }

  std::size_t num_vertices_ = 0;
  std::set<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

inline Graph CompleteGraph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.AddEdge(u, v);
  return g;
}

inline Graph CycleGraph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) g.AddEdge(u, (u + 1) % n);
  return g;
}

// Vertex -> color assignment over the palette Z_k.
struct Coloring {
  int palette_size = 1;
  std::vector<int> colors;

  Coloring() = default;
  Coloring(int palette, std::vector<int> values)
      : palette_size(palette), colors(std::move(values)) {
    if (palette_size < 1) {
      throw Error(ErrorKind::kInvalidArgument, "palette size must be >= 1");
    }
    for (std::size_t i = 0; i < colors.size(); ++i) {
      if (colors[i] < 0 || colors[i] >= palette_size) {
        throw Error(ErrorKind::kInvalidArgument,
                    "color " + std::to_string(colors[i]) + " of " +
                        VertexLabel(i) + " outside Z_" +
                        std::to_string(palette_size));
      }
    }
  }

  std::size_t size() const { return colors.size(); }
  int operator[](Vertex v) const { return colors[v]; }

  // Distinct colors in use, ascending.
  std::vector<int> UsedColors() const {
    std::vector<int> used(colors);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    return used;
  }

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

inline bool ValidateColoring(const Graph& g, const Coloring& c) {
  if (c.size() != g.num_vertices()) {
    throw Error(ErrorKind::kDimension,
                "coloring has " + std::to_string(c.size()) +
                    " entries, graph has " + std::to_string(g.num_vertices()) +
                    " vertices");
  }
  return std::none_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return c[e.first] == c[e.second];
  });
}

// Adjacency matrix coding: the strictly-lower triangle row by row
// (a21 a31 a32 a41 ...) followed by the diagonal a11 ... amm, where the
// diagonal carries one decimal digit per vertex color.
struct MatrixCode {
  std::string structure_part;
  std::string diagonal_part;
  bool colored = false;

  std::string Render() const { return structure_part + diagonal_part; }

  friend bool operator==(const MatrixCode&, const MatrixCode&) = default;
};

inline constexpr int kMaxDigitPalette = 10;

inline std::size_t StructureLength(std::size_t m) { return m * (m - 1) / 2; }

inline MatrixCode EncodeMatrix(const Graph& g,
                               const std::optional<Coloring>& c = std::nullopt) {
  const std::size_t m = g.num_vertices();
  MatrixCode code;
  code.structure_part.reserve(StructureLength(m));
  for (Vertex i = 1; i < m; ++i) {
    for (Vertex j = 0; j < i; ++j) {
      code.structure_part.push_back(g.HasEdge(i, j) ? '1' : '0');
    }
  }
  if (c) {
    if (c->palette_size > kMaxDigitPalette) {
      throw Error(ErrorKind::kUnsupportedCoding,
                  "digit coding needs palette <= 10, got " +
                      std::to_string(c->palette_size));
    }
    if (!ValidateColoring(g, *c)) {
      throw Error(ErrorKind::kInvalidArgument, "coloring is not proper");
    }
    for (int color : c->colors) code.diagonal_part.push_back(char('0' + color));
    code.colored = true;
  } else {
    code.diagonal_part.assign(m, '0');
  }
  return code;
}

struct DecodedGraph {
  Graph graph;
  std::optional<Coloring> coloring;
};

// Inverse of EncodeMatrix. A decoded coloring gets the palette `palette_size`.
inline DecodedGraph DecodeMatrix(const MatrixCode& code, std::size_t num_vertices,
                                 int palette_size = kMaxDigitPalette) {
  const std::size_t m = num_vertices;
  if (m == 0 || code.structure_part.size() != StructureLength(m) ||
      code.diagonal_part.size() != m) {
    throw Error(ErrorKind::kDimension,
                "matrix code lengths do not match " + std::to_string(m) +
                    " vertices");
  }
  if (palette_size < 1 || palette_size > kMaxDigitPalette) {
    throw Error(ErrorKind::kUnsupportedCoding, "digit coding needs palette <= 10");
  }
  DecodedGraph out{Graph(m), std::nullopt};
  std::size_t pos = 0;
  for (Vertex i = 1; i < m; ++i) {
    for (Vertex j = 0; j < i; ++j, ++pos) {
      const char bit = code.structure_part[pos];
      if (bit == '1') {
        out.graph.AddEdge(i, j);
      } else if (bit != '0') {
        throw Error(ErrorKind::kParse, std::string("non-binary structure character '") +
                                           bit + "'");
      }
    }
  }
  std::vector<int> colors;
  for (char d : code.diagonal_part) {
    if (d < '0' || d > '9') {
      throw Error(ErrorKind::kParse, std::string("non-digit diagonal character '") +
                                         d + "'");
    }
    colors.push_back(d - '0');
  }
  if (code.colored) {
    out.coloring = Coloring(palette_size, std::move(colors));
  } else if (std::any_of(colors.begin(), colors.end(), [](int x) { return x != 0; })) {
    throw Error(ErrorKind::kParse, "uncolored code with nonzero diagonal");
  }
  return out;
}

// Splits a flat code string of length m(m+1)/2 into its two parts.
inline std::pair<MatrixCode, std::size_t> SplitMatrixCode(const std::string& text,
                                                          bool colored) {
  std::size_t m = 1;
  while (m * (m + 1) / 2 < text.size()) ++m;
  if (text.empty() || m * (m + 1) / 2 != text.size()) {
    throw Error(ErrorKind::kDimension,
                "code length " + std::to_string(text.size()) +
                    " is not m(m+1)/2 for any m");
  }
  MatrixCode code{text.substr(0, StructureLength(m)),
                  text.substr(StructureLength(m)), colored};
  return {code, m};
}

struct ChromaticBounds {
  int lower = 1;
  int upper = 1;
  // False when the graph exceeded the clique-search guard; `lower` is then 1.
  bool lower_from_clique = true;
};

inline constexpr std::size_t kDefaultExhaustiveGuard = 16;

namespace internal {

inline void ExtendClique(const std::vector<std::uint64_t>& adj, std::uint64_t candidates,
                         int size, int& best) {
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  if (size + __builtin_popcountll(candidates) <= best) return;
  while (candidates != 0) {
    if (size + __builtin_popcountll(candidates) <= best) return;
    const int v = __builtin_ctzll(candidates);
    candidates &= candidates - 1;
    ExtendClique(adj, candidates & adj[v], size + 1, best);
  }
}

}  // namespace internal

inline int MaxCliqueSize(const Graph& g) {
  if (g.num_vertices() > 64) {
    throw Error(ErrorKind::kGuardExceeded, "clique search supports <= 64 vertices");
  }
  std::vector<std::uint64_t> adj(g.num_vertices(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  const std::uint64_t all = g.num_vertices() == 64
                                ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << g.num_vertices()) - 1;
  int best = 0;
  internal::ExtendClique(adj, all, 0, best);
  return best;
}

// Lower bound from the largest clique, upper bound from Brooks' theorem
// applied per connected component (d, or d + 1 for complete graphs and odd
// cycles).
inline ChromaticBounds ComputeChromaticBounds(
    const Graph& g, std::size_t guard = kDefaultExhaustiveGuard) {
  ChromaticBounds bounds;
  int upper = 1;
  for (const auto& comp : g.Components()) {
    const Graph sub = g.Induced(comp);
    const int d = static_cast<int>(sub.MaxDegree());
    const bool odd_cycle = sub.num_vertices() % 2 == 1 && sub.num_vertices() >= 3 &&
                           d == 2 && sub.num_edges() == sub.num_vertices();
    upper = std::max(upper, (sub.IsComplete() || odd_cycle) ? d + 1 : d);
  }
  bounds.upper = upper;
  if (g.num_vertices() > guard) {
    bounds.lower = 1;
    bounds.lower_from_clique = false;
  } else {
    bounds.lower = MaxCliqueSize(g);
  }
  return bounds;
}

// Disjoint union of g1 and g2 (g2 shifted by |V(g1)|) plus edges
// (u in g1, w in g2), both indices local to their operand.
inline Graph JoinGraphs(const Graph& g1, const Graph& g2,
                        const std::vector<Edge>& cross_edges) {
  const std::size_t offset = g1.num_vertices();
  Graph out(offset + g2.num_vertices());
  for (const auto& [u, v] : g1.edges()) out.AddEdge(u, v);
  for (const auto& [u, v] : g2.edges()) out.AddEdge(u + offset, v + offset);
  for (const auto& [u, w] : cross_edges) {
    if (u >= g1.num_vertices() || w >= g2.num_vertices()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "cross edge (" + std::to_string(u + 1) + "," +
                      std::to_string(w + 1) + ") does not join the two operands");
    }
    out.AddEdge(u, w + offset);
  }
  return out;
}

}  // namespace graphshare
