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


// Sharing a particular proper n-coloring (the color-to-vertex assignment,
// colors drawn from a k-color palette) of a graph whose structure is public.
//
// The shared number is built in two parts:
//   * type II vertices, ascending: the rank of each vertex's Z_n color among
//     the colors its type I neighbors leave available (digit mod l_i);
//   * the reduced structure, ascending: raw Z_k colors (digit mod k).
// Type II digits are unconstrained (plain KGH semantics). Reduced-structure
// digits of adjacent vertices must differ, so the whole vector is dealt
// under KGHe with that predicate.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "graphshare/access_structure.hpp"
#include "graphshare/error.hpp"
#include "graphshare/graph.hpp"
#include "graphshare/kgh.hpp"
#include "graphshare/oracle.hpp"
#include "graphshare/random.hpp"
#include "graphshare/vertex_types.hpp"

namespace graphshare {

// Order-preserving bijection between n chosen palette colors and Z_n.
struct PaletteMapping {
  std::vector<int> chosen_colors;  // ascending

  int n() const { return static_cast<int>(chosen_colors.size()); }

  int ToZn(int color) const {
    auto it = std::lower_bound(chosen_colors.begin(), chosen_colors.end(), color);
    if (it == chosen_colors.end() || *it != color) {
      throw Error(ErrorKind::kInvalidArgument,
                  "color " + std::to_string(color) + " is not in the mapping");
    }
    return static_cast<int>(it - chosen_colors.begin());
  }

  int FromZn(int color) const {
    if (color < 0 || color >= n()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "Z_n color " + std::to_string(color) + " out of range");
    }
    return chosen_colors[static_cast<std::size_t>(color)];
  }

  friend bool operator==(const PaletteMapping&, const PaletteMapping&) = default;
};

inline PaletteMapping MakePaletteMapping(std::vector<int> colors_used, int n) {
  std::sort(colors_used.begin(), colors_used.end());
  colors_used.erase(std::unique(colors_used.begin(), colors_used.end()),
                    colors_used.end());
  if (static_cast<int>(colors_used.size()) != n) {
    throw Error(ErrorKind::kInvalidArgument,
                "mapping needs " + std::to_string(n) + " distinct colors, got " +
                    std::to_string(colors_used.size()));
  }
  return {std::move(colors_used)};
}

// Relabels the colors used by c onto Z_n, n = number of distinct colors.
inline Coloring ProjectToZn(const Coloring& c) {
  const std::vector<int> used = c.UsedColors();
  const PaletteMapping mapping{used};
  std::vector<int> out;
  out.reserve(c.size());
  for (int color : c.colors) out.push_back(mapping.ToZn(color));
  return Coloring(std::max(1, mapping.n()), std::move(out));
}

struct AvailableEntry {
  Vertex vertex = 0;
  int excluded_count = 0;       // n_i
  std::vector<int> available;   // C_i, ascending, |C_i| = l_i

  int available_count() const { return static_cast<int>(available.size()); }

  friend bool operator==(const AvailableEntry&, const AvailableEntry&) = default;
};

struct AvailableColors {
  std::vector<AvailableEntry> entries;  // type II vertices, ascending

  std::size_t w() const { return entries.size(); }

  std::vector<Digit> Moduli() const {
    std::vector<Digit> out;
    for (const auto& e : entries) out.push_back(static_cast<Digit>(e.available_count()));
    return out;
  }
};

// C_i = Z_n minus the colors of the type I neighbors of each type II vertex.
inline AvailableColors BuildAvailableSets(const Graph& g,
                                          const oracle::PartialColoring& type1_colors,
                                          const std::vector<Vertex>& type2, int n) {
  AvailableColors out;
  std::vector<char> excluded(static_cast<std::size_t>(n));
  for (Vertex v : type2) {
    std::fill(excluded.begin(), excluded.end(), 0);
    AvailableEntry entry{v, 0, {}};
    for (Vertex w : g.Neighbors(v)) {
      if (!type1_colors[w]) {
        throw Error(ErrorKind::kIneligible,
                    "type II " + VertexLabel(v) + " has uncolored neighbor " +
                        VertexLabel(w));
      }
      const int color = *type1_colors[w];
      if (color < 0 || color >= n) {
        throw Error(ErrorKind::kInvalidArgument, "neighbor color outside Z_n");
      }
      if (!excluded[color]) {
        excluded[color] = 1;
        ++entry.excluded_count;
      }
    }
    for (int s = 0; s < n; ++s) {
      if (!excluded[s]) entry.available.push_back(s);
    }
    if (entry.available_count() <= 1) {
      throw Error(ErrorKind::kIneligible,
                  VertexLabel(v) + " has at most one available color");
    }
    if (entry.available_count() == n) {
      throw Error(ErrorKind::kIneligible, VertexLabel(v) + " has no excluded color");
    }
    out.entries.push_back(std::move(entry));
  }
  return out;
}

// Digit i is the rank of colors_zn[i] within C_i.
inline std::vector<Digit> EncodeType2(const std::vector<int>& colors_zn,
                                      const AvailableColors& avail) {
  if (colors_zn.size() != avail.w()) {
    throw Error(ErrorKind::kDimension, "one color per type II vertex expected");
  }
  std::vector<Digit> digits;
  for (std::size_t i = 0; i < colors_zn.size(); ++i) {
    const auto& c_i = avail.entries[i].available;
    auto it = std::find(c_i.begin(), c_i.end(), colors_zn[i]);
    if (it == c_i.end()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "color " + std::to_string(colors_zn[i]) + " not available at " +
                      VertexLabel(avail.entries[i].vertex));
    }
    digits.push_back(static_cast<Digit>(it - c_i.begin()));
  }
  return digits;
}

inline std::vector<int> DecodeType2(const std::vector<Digit>& digits,
                                    const AvailableColors& avail) {
  if (digits.size() != avail.w()) {
    throw Error(ErrorKind::kDimension, "one digit per type II vertex expected");
  }
  std::vector<int> colors;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const auto& c_i = avail.entries[i].available;
    if (digits[i] >= c_i.size()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "digit " + std::to_string(digits[i]) + " outside Z_" +
                      std::to_string(c_i.size()));
    }
    colors.push_back(c_i[digits[i]]);
  }
  return colors;
}

struct ColoringSecret {
  std::vector<Digit> type2_digits;
  std::vector<Digit> type2_moduli;
  std::vector<Digit> type1_colors;  // Z_k colors of the reduced structure
  int k = 0;

  SecretVector ToSecretVector() const {
    std::vector<Digit> digits = type2_digits;
    std::vector<Digit> moduli = type2_moduli;
    digits.insert(digits.end(), type1_colors.begin(), type1_colors.end());
    moduli.insert(moduli.end(), type1_colors.size(), static_cast<Digit>(k));
    return SecretVector(std::move(digits), std::move(moduli));
  }

  std::string Render() const { return ToSecretVector().Render(); }
};

// Public parameters of one coloring sharing: the graph, its vertex classes
// for n colors, the reduced structure and the palette size.
struct ColoringScheme {
  Graph graph;
  std::vector<VertexClass> classes;
  ReducedStructure reduced;
  int k = 0;
  int n = 0;

  std::vector<Vertex> type1() const { return VerticesOfKind(classes, VertexKind::kTypeI); }
  std::vector<Vertex> type2() const { return VerticesOfKind(classes, VertexKind::kTypeII); }
};

// Classifies g for n colors, checks eligibility and picks the reduced
// structure: `reduced_override` if given (validated), else the greedy
// reduction that keeps all n colors visible.
inline ColoringScheme PrepareColoringScheme(
    const Graph& g, const Coloring& c, int n,
    const std::optional<std::vector<Vertex>>& reduced_override = std::nullopt,
    const oracle::Limits& limits = {}) {
  if (!ValidateColoring(g, c)) {
    throw Error(ErrorKind::kInvalidArgument, "coloring is not proper");
  }
  if (static_cast<int>(c.UsedColors().size()) != n) {
    throw Error(ErrorKind::kIneligible,
                "coloring uses " + std::to_string(c.UsedColors().size()) +
                    " colors, expected " + std::to_string(n));
  }
  if (c.palette_size < 2) {
    throw Error(ErrorKind::kIneligible, "a one-color palette leaves nothing to share");
  }
  ColoringScheme scheme{g, ClassifyVertices(g, n, limits), {}, c.palette_size, n};
  CheckSharingEligibility(g, scheme.classes);
  const Coloring projected = ProjectToZn(c);
  scheme.reduced = reduced_override
                       ? AcceptReducedStructure(g, scheme.classes, projected, n,
                                                *reduced_override)
                       : ReduceStructure(g, scheme.classes, projected, n,
                                         ReduceOptions{.keep_all_colors = true});
  std::set<int> shown;
  for (Vertex v : scheme.reduced.vertices) shown.insert(projected[v]);
  if (static_cast<int>(shown.size()) != n) {
    throw Error(ErrorKind::kIneligible, "reduced structure does not show all " +
                                            std::to_string(n) + " colors");
  }
  return scheme;
}

// The scheme as seen by share holders: graph, palette, color count and the
// published reduced structure, without the coloring.
inline ColoringScheme PublicColoringScheme(const Graph& g, int k, int n,
                                           std::vector<Vertex> reduced,
                                           const oracle::Limits& limits = {}) {
  if (n < 1 || n > k || k < 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "need 1 <= n <= k and k >= 2, got n=" + std::to_string(n) +
                    " k=" + std::to_string(k));
  }
  ColoringScheme scheme{g, ClassifyVertices(g, n, limits), {}, k, n};
  CheckSharingEligibility(g, scheme.classes);
  std::sort(reduced.begin(), reduced.end());
  reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
  for (Vertex v : reduced) {
    if (v >= g.num_vertices() || scheme.classes[v].kind != VertexKind::kTypeI) {
      throw Error(ErrorKind::kIneligible, VertexLabel(v) + " is not a type I vertex");
    }
  }
  if (static_cast<int>(reduced.size()) < n) {
    throw Error(ErrorKind::kIneligible, "reduced structure cannot show all " +
                                            std::to_string(n) + " colors");
  }
  scheme.reduced = {std::move(reduced), n};
  return scheme;
}

// Digits of adjacent reduced-structure vertices must differ.
inline SecretPredicate ReducedStructurePredicate(const ColoringScheme& scheme) {
  const std::size_t w = scheme.type2().size();
  std::vector<std::pair<std::size_t, std::size_t>> adjacent;
  const auto& r = scheme.reduced.vertices;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      if (scheme.graph.HasEdge(r[i], r[j])) adjacent.emplace_back(w + i, w + j);
    }
  }
  const std::size_t length = w + r.size();
  return {"reduced-adjacent-distinct",
          [adjacent, length](const SecretVector& s) {
            if (s.size() != length) return false;
            return std::all_of(adjacent.begin(), adjacent.end(), [&](const auto& p) {
              return s.digits[p.first] != s.digits[p.second];
            });
          }};
}

inline ColoringSecret AssembleSecret(const ColoringScheme& scheme, const Coloring& c) {
  const Graph& g = scheme.graph;
  if (c.palette_size != scheme.k) {
    throw Error(ErrorKind::kInvalidArgument,
                "coloring palette " + std::to_string(c.palette_size) +
                    " differs from scheme palette " + std::to_string(scheme.k));
  }
  if (!ValidateColoring(g, c)) {
    throw Error(ErrorKind::kInvalidArgument, "coloring is not proper");
  }
  CheckSharingEligibility(g, scheme.classes);

  std::vector<int> reduced_colors;
  for (Vertex v : scheme.reduced.vertices) reduced_colors.push_back(c[v]);
  std::vector<int> distinct = reduced_colors;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (static_cast<int>(distinct.size()) != scheme.n || distinct != c.UsedColors()) {
    throw Error(ErrorKind::kIneligible,
                "reduced structure does not carry all " + std::to_string(scheme.n) +
                    " colors of the coloring");
  }
  const PaletteMapping mapping = MakePaletteMapping(distinct, scheme.n);
  std::vector<int> zn;
  for (int color : c.colors) zn.push_back(mapping.ToZn(color));
  const Coloring cz(scheme.n, zn);

  const std::vector<Vertex> type1 = scheme.type1();
  if (!VerifyDetermining(g, scheme.reduced.vertices, cz, type1, scheme.n)) {
    throw Error(ErrorKind::kIneligible,
                "reduced structure does not determine the type I coloring");
  }
  oracle::PartialColoring type1_colors(g.num_vertices());
  for (Vertex v : type1) type1_colors[v] = cz[v];
  const std::vector<Vertex> type2 = scheme.type2();
  const AvailableColors avail = BuildAvailableSets(g, type1_colors, type2, scheme.n);
  std::vector<int> type2_zn;
  for (Vertex v : type2) type2_zn.push_back(cz[v]);

  ColoringSecret secret;
  secret.type2_digits = EncodeType2(type2_zn, avail);
  secret.type2_moduli = avail.Moduli();
  for (int color : reduced_colors) secret.type1_colors.push_back(static_cast<Digit>(color));
  secret.k = scheme.k;
  return secret;
}

// Rebuilds the coloring from a recovered secret vector: palette mapping from
// the reduced-structure colors, propagation over type I, available sets and
// type II digits, then lift back to Z_k.
inline Coloring ColoringFromSecret(const ColoringScheme& scheme, const SecretVector& secret) {
  const Graph& g = scheme.graph;
  const std::vector<Vertex> type1 = scheme.type1();
  const std::vector<Vertex> type2 = scheme.type2();
  const auto& reduced = scheme.reduced.vertices;
  const std::size_t w = type2.size();
  if (secret.size() != w + reduced.size()) {
    throw Error(ErrorKind::kInvalidSecret, "secret length does not fit the scheme");
  }
  for (std::size_t i = w; i < secret.size(); ++i) {
    if (secret.moduli[i] != static_cast<Digit>(scheme.k)) {
      throw Error(ErrorKind::kInvalidSecret, "reduced-structure modulus is not k");
    }
  }
  std::vector<int> reduced_colors;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    reduced_colors.push_back(static_cast<int>(secret.digits[w + i]));
  }
  std::vector<int> distinct = reduced_colors;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (static_cast<int>(distinct.size()) != scheme.n) {
    throw Error(ErrorKind::kInvalidSecret,
                "recovered reduced structure shows " + std::to_string(distinct.size()) +
                    " colors, expected " + std::to_string(scheme.n));
  }
  const PaletteMapping mapping = MakePaletteMapping(distinct, scheme.n);

  oracle::PartialColoring seeds(g.num_vertices());
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    seeds[reduced[i]] = mapping.ToZn(reduced_colors[i]);
  }
  const oracle::Propagation prop = oracle::Propagate(g, type1, std::move(seeds), scheme.n);
  if (prop.conflict) {
    throw Error(ErrorKind::kInvalidSecret, "propagation conflict on type I vertices");
  }
  for (Vertex v : type1) {
    if (!prop.colors[v]) {
      throw Error(ErrorKind::kInvalidSecret,
                  "propagation leaves " + VertexLabel(v) + " undetermined");
    }
  }

  AvailableColors avail;
  try {
    avail = BuildAvailableSets(g, prop.colors, type2, scheme.n);
  } catch (const Error& e) {
    throw Error(ErrorKind::kInvalidSecret, e.what());
  }
  const std::vector<Digit> expected_moduli = avail.Moduli();
  for (std::size_t i = 0; i < w; ++i) {
    if (secret.moduli[i] != expected_moduli[i]) {
      throw Error(ErrorKind::kInvalidSecret,
                  "available colors at " + VertexLabel(type2[i]) +
                      " do not match the share moduli");
    }
  }
  const std::vector<int> type2_zn = DecodeType2(
      std::vector<Digit>(secret.digits.begin(), secret.digits.begin() + w), avail);

  std::vector<int> colors(g.num_vertices(), 0);
  for (Vertex v : type1) colors[v] = mapping.FromZn(*prop.colors[v]);
  for (std::size_t i = 0; i < w; ++i) colors[type2[i]] = mapping.FromZn(type2_zn[i]);
  Coloring out(scheme.k, std::move(colors));
  if (!ValidateColoring(g, out)) {
    throw Error(ErrorKind::kInvalidSecret, "recovered coloring is not proper");
  }
  return out;
}

template <UniformSource Source>
std::vector<ShareBundle> DealColoring(const ColoringScheme& scheme, const Coloring& c,
                                      int t, Source& source) {
  const SecretVector secret = AssembleSecret(scheme, c).ToSecretVector();
  return DealKghe(secret, t, ReducedStructurePredicate(scheme), source);
}

template <UniformSource Source>
std::vector<std::vector<IndexedShare>> DealColoringGeneral(const ColoringScheme& scheme,
                                                           const Coloring& c,
                                                           const AccessStructure& acc,
                                                           Source& source) {
  const SecretVector secret = AssembleSecret(scheme, c).ToSecretVector();
  return DealGeneral(secret, acc, source,
                     std::optional<SecretPredicate>(ReducedStructurePredicate(scheme)));
}

inline Coloring RecoverColoring(const ColoringScheme& scheme,
                                std::span<const ShareBundle> bundles) {
  return ColoringFromSecret(scheme,
                            RecoverKghe(bundles, ReducedStructurePredicate(scheme)));
}

inline Coloring RecoverColoringGeneral(const ColoringScheme& scheme,
                                       std::span<const IndexedShare> pooled,
                                       const AccessStructure& acc) {
  return ColoringFromSecret(
      scheme, RecoverGeneral(pooled, acc,
                             std::optional<SecretPredicate>(ReducedStructurePredicate(scheme))));
}

// Whole-key sharing: the diagonal a11..amm as one vector mod k, restricted to
// proper colorings of g. Only the vertex partition is protected; any proper
// coloring that comes out of recovery is accepted.
inline SecretPredicate ProperColoringPredicate(const Graph& g) {
  return {"proper-coloring", [g](const SecretVector& s) {
            if (s.size() != g.num_vertices()) return false;
            return std::none_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
              return s.digits[e.first] == s.digits[e.second];
            });
          }};
}

template <UniformSource Source>
std::vector<ShareBundle> DealPrivateKey(const Graph& g, const Coloring& c, int t,
                                        Source& source) {
  if (c.palette_size < 3) {
    throw Error(ErrorKind::kInvalidArgument, "private key palette must have >= 3 colors");
  }
  if (!ValidateColoring(g, c)) {
    throw Error(ErrorKind::kInvalidKey, "coloring is not proper");
  }
  std::vector<Digit> digits(c.colors.begin(), c.colors.end());
  const SecretVector secret = SecretVector::Uniform(std::move(digits),
                                                    static_cast<Digit>(c.palette_size));
  return DealKghe(secret, t, ProperColoringPredicate(g), source);
}

inline Coloring RecoverPrivateKey(const Graph& g, std::span<const ShareBundle> bundles) {
  SecretVector secret;
  try {
    secret = RecoverKghe(bundles, ProperColoringPredicate(g));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kInvalidSecret) throw Error(ErrorKind::kInvalidKey, e.what());
    throw;
  }
  const Digit k = secret.moduli.empty() ? 0 : secret.moduli.front();
  if (std::any_of(secret.moduli.begin(), secret.moduli.end(),
                  [k](Digit m) { return m != k; })) {
    throw Error(ErrorKind::kInvalidKey, "private key shares mix moduli");
  }
  return Coloring(static_cast<int>(k),
                  std::vector<int>(secret.digits.begin(), secret.digits.end()));
}

enum class CountMode {
  kType1Unknown,  // type II part known: C(k,n) * n! palette choices remain
  kType2Unknown,  // type I part known: prod l_i choices remain
};

inline std::uint64_t Binomial(int k, int n) {
  if (n < 0 || n > k) return 0;
  std::uint64_t out = 1;
  for (int i = 1; i <= n; ++i) out = out * static_cast<std::uint64_t>(k - n + i) / i;
  return out;
}

inline std::uint64_t CountPossibilities(int k, int n, const AvailableColors& avail,
                                        CountMode mode) {
  if (mode == CountMode::kType1Unknown) {
    std::uint64_t out = Binomial(k, n);
    for (int i = 2; i <= n; ++i) out *= static_cast<std::uint64_t>(i);
    return out;
  }
  std::uint64_t out = 1;
  for (const auto& e : avail.entries) out *= static_cast<std::uint64_t>(e.available_count());
  return out;
}

}  // namespace graphshare
