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


// Random instances for the coloring-sharing pipeline.

#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "graphshare/coloring_share.hpp"
#include "graphshare/oracle.hpp"
#include "test_graphs.hpp"

namespace graphshare::testing {

struct EligibleCase {
  Coloring coloring;  // over Z_k
  ColoringScheme scheme;
};

// Random graph on at most max_m vertices with a random proper coloring over a
// random palette k <= max_k, or nothing if the graph cannot be shared
// (type III or free vertices, type II next to type II, or no reduced
// structure carrying every color).
inline std::optional<EligibleCase> TryRandomEligibleCase(Rng& rng, std::size_t max_m = 9,
                                                         int max_k = 10) {
  const std::size_t m = 2 + rng.Uniform(static_cast<std::uint32_t>(max_m - 1));
  const Graph g = RandomGraph(rng, m, 25 + rng.Uniform(60));
  const int n = oracle::ChromaticNumber(g);
  if (n > max_k) return std::nullopt;
  std::vector<VertexClass> classes;
  try {
    classes = ClassifyVertices(g, n);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (!IsSharingEligible(g, classes)) return std::nullopt;
  const auto all = oracle::EnumerateProperColorings(g, n);
  const Coloring& base = all[rng.Uniform(static_cast<std::uint32_t>(all.size()))];

  const int k = n + static_cast<int>(rng.Uniform(static_cast<std::uint32_t>(max_k - n + 1)));
  std::vector<int> palette(k);
  for (int i = 0; i < k; ++i) palette[i] = i;
  for (int i = k - 1; i > 0; --i) std::swap(palette[i], palette[rng.Uniform(i + 1)]);
  std::vector<int> colors;
  for (int c : base.colors) colors.push_back(palette[c]);
  Coloring coloring(k, colors);
  try {
    return EligibleCase{coloring, PrepareColoringScheme(g, coloring, n)};
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace graphshare::testing
