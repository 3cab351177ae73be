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


// Vertex classification by degree of freedom across all proper n-colorings,
// and reduced (determining) structures over the type I vertices.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "graphshare/error.hpp"
#include "graphshare/graph.hpp"
#include "graphshare/oracle.hpp"

namespace graphshare {

enum class VertexKind { kTypeI, kTypeII, kTypeIII };

struct VertexClass {
  VertexKind kind = VertexKind::kTypeI;
  // 1 for type I, the constant y for type II, empty for type III.
  std::optional<int> dof;

  friend bool operator==(const VertexClass&, const VertexClass&) = default;
};

inline std::string KindName(VertexKind kind) {
  switch (kind) {
    case VertexKind::kTypeI: return "I";
    case VertexKind::kTypeII: return "II";
    case VertexKind::kTypeIII: return "III";
  }
  return "?";
}

// Throws kInfeasible if g has no proper n-coloring and kIneligible for a
// vertex that keeps all n colors in every coloring (an isolated vertex).
inline std::vector<VertexClass> ClassifyVertices(const Graph& g, int n,
                                                 const oracle::Limits& limits = {}) {
  const std::size_t m = g.num_vertices();
  std::vector<int> min_dof(m, n + 1), max_dof(m, -1);
  std::vector<char> seen(static_cast<std::size_t>(n));
  const std::size_t count = oracle::ForEachProperColoring(
      g, n,
      [&](const std::vector<int>& colors) {
        for (Vertex v = 0; v < m; ++v) {
          std::fill(seen.begin(), seen.end(), 0);
          int distinct = 0;
          for (Vertex w : g.Neighbors(v)) {
            if (!seen[colors[w]]) {
              seen[colors[w]] = 1;
              ++distinct;
            }
          }
          const int dof = n - distinct;
          min_dof[v] = std::min(min_dof[v], dof);
          max_dof[v] = std::max(max_dof[v], dof);
        }
      },
      limits);
  if (count == 0) {
    throw Error(ErrorKind::kInfeasible,
                "graph has no proper " + std::to_string(n) + "-coloring");
  }
  std::vector<VertexClass> classes(m);
  for (Vertex v = 0; v < m; ++v) {
    if (min_dof[v] != max_dof[v]) {
      classes[v] = {VertexKind::kTypeIII, std::nullopt};
    } else if (min_dof[v] == 1) {
      classes[v] = {VertexKind::kTypeI, 1};
    } else if (min_dof[v] < n) {
      classes[v] = {VertexKind::kTypeII, min_dof[v]};
    } else {
      throw Error(ErrorKind::kIneligible,
                  VertexLabel(v) + " keeps all " + std::to_string(n) +
                      " colors in every coloring");
    }
  }
  return classes;
}

inline std::vector<Vertex> VerticesOfKind(const std::vector<VertexClass>& classes,
                                          VertexKind kind) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < classes.size(); ++v) {
    if (classes[v].kind == kind) out.push_back(v);
  }
  return out;
}

// Coloring sharing needs every vertex to be type I, or type II with only
// type I neighbors.
inline void CheckSharingEligibility(const Graph& g,
                                    const std::vector<VertexClass>& classes) {
  for (Vertex v = 0; v < classes.size(); ++v) {
    if (classes[v].kind == VertexKind::kTypeIII) {
      throw Error(ErrorKind::kIneligible, VertexLabel(v) + " is type III");
    }
    if (classes[v].kind == VertexKind::kTypeII) {
      for (Vertex w : g.Neighbors(v)) {
        if (classes[w].kind != VertexKind::kTypeI) {
          throw Error(ErrorKind::kIneligible,
                      "type II " + VertexLabel(v) + " is adjacent to non-type-I " +
                          VertexLabel(w));
        }
      }
    }
  }
}

inline bool IsSharingEligible(const Graph& g, const std::vector<VertexClass>& classes) {
  try {
    CheckSharingEligibility(g, classes);
    return true;
  } catch (const Error&) {
    return false;
  }
}

struct ReducedStructure {
  std::vector<Vertex> vertices;  // ascending
  int n = 0;

  friend bool operator==(const ReducedStructure&, const ReducedStructure&) = default;
};

inline bool VerifyDetermining(const Graph& g, const std::vector<Vertex>& subset,
                              const Coloring& c, const std::vector<Vertex>& type1,
                              int n) {
  for (Vertex v : subset) {
    if (std::find(type1.begin(), type1.end(), v) == type1.end()) return false;
  }
  return oracle::Determines(g, subset, c, type1, n);
}

struct ReduceOptions {
  // Only drop a vertex if the remaining set still shows all n colors of c, so
  // that the palette mapping can be rebuilt from the structure alone.
  bool keep_all_colors = false;
};

namespace internal {

inline bool ShowsAllColors(const std::vector<Vertex>& subset, const Coloring& c, int n) {
  std::vector<char> present(static_cast<std::size_t>(n));
  int count = 0;
  for (Vertex v : subset) {
    if (!present[c[v]]) {
      present[c[v]] = 1;
      ++count;
    }
  }
  return count == n;
}

inline void CheckColoringOverZn(const Graph& g, const Coloring& c, int n) {
  if (!ValidateColoring(g, c)) {
    throw Error(ErrorKind::kInvalidArgument, "coloring is not proper");
  }
  for (Vertex v = 0; v < c.size(); ++v) {
    if (c[v] >= n) {
      throw Error(ErrorKind::kInvalidArgument,
                  "color of " + VertexLabel(v) + " outside Z_" + std::to_string(n));
    }
  }
}

}  // namespace internal

// Greedy elimination over the type I vertices in ascending order. The result
// is deterministic and locally minimal.
inline ReducedStructure ReduceStructure(const Graph& g,
                                        const std::vector<VertexClass>& classes,
                                        const Coloring& c, int n,
                                        const ReduceOptions& options = {}) {
  internal::CheckColoringOverZn(g, c, n);
  const std::vector<Vertex> type1 = VerticesOfKind(classes, VertexKind::kTypeI);
  std::vector<Vertex> kept = type1;
  if (options.keep_all_colors && !internal::ShowsAllColors(kept, c, n)) {
    throw Error(ErrorKind::kIneligible,
                "type I vertices do not carry all " + std::to_string(n) + " colors");
  }
  for (Vertex candidate : type1) {
    std::vector<Vertex> trial;
    for (Vertex v : kept) {
      if (v != candidate) trial.push_back(v);
    }
    if (options.keep_all_colors && !internal::ShowsAllColors(trial, c, n)) continue;
    if (oracle::Determines(g, trial, c, type1, n)) kept = std::move(trial);
  }
  return {kept, n};
}

// Validates a caller-supplied structure: type I members that determine c.
inline ReducedStructure AcceptReducedStructure(const Graph& g,
                                               const std::vector<VertexClass>& classes,
                                               const Coloring& c, int n,
                                               std::vector<Vertex> vertices) {
  internal::CheckColoringOverZn(g, c, n);
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (Vertex v : vertices) {
    if (v >= classes.size() || classes[v].kind != VertexKind::kTypeI) {
      throw Error(ErrorKind::kIneligible,
                  VertexLabel(v) + " is not a type I vertex");
    }
  }
  const std::vector<Vertex> type1 = VerticesOfKind(classes, VertexKind::kTypeI);
  if (!oracle::Determines(g, vertices, c, type1, n)) {
    throw Error(ErrorKind::kIneligible,
                "supplied structure does not determine the type I coloring");
  }
  return {vertices, n};
}

}  // namespace graphshare
