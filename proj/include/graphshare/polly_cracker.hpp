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


// Toy graph 3-coloring Polly Cracker. The public key is the graph (equivalently
// the base B), the private key is the 0/1 point z with t[v,s] = 1 iff vertex v
// has color s. No security is claimed for this construction.

#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "graphshare/error.hpp"
#include "graphshare/graph.hpp"
#include "graphshare/polynomial.hpp"
#include "graphshare/random.hpp"

namespace graphshare::polly {

inline constexpr int kColors = 3;

// B1: t[v,0]+t[v,1]+t[v,2]-1 per vertex; B2: t[v,s]*t[v,p] for each unordered
// color pair per vertex; B3: t[v,s]*t[w,s] per edge and color.
inline std::vector<SparsePolynomial> BuildBase(const Graph& g, FieldElement p = 2) {
  CheckPrime(p);
  std::vector<SparsePolynomial> base;
  base.reserve(g.num_vertices() * 4 + g.num_edges() * 3);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    SparsePolynomial q = SparsePolynomial::Constant(p, p - 1);
    for (int s = 0; s < kColors; ++s) q = q + SparsePolynomial::Var(p, {v, s});
    base.push_back(std::move(q));
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (int s = 0; s < kColors; ++s) {
      for (int r = s + 1; r < kColors; ++r) {
        base.push_back(SparsePolynomial::Var(p, {v, s}) * SparsePolynomial::Var(p, {v, r}));
      }
    }
  }
  for (const auto& [u, w] : g.edges()) {
    for (int s = 0; s < kColors; ++s) {
      base.push_back(SparsePolynomial::Var(p, {u, s}) * SparsePolynomial::Var(p, {w, s}));
    }
  }
  return base;
}

inline Point ZeroPoint(const Coloring& c) {
  Point z;
  for (Vertex v = 0; v < c.size(); ++v) {
    for (int s = 0; s < kColors; ++s) z[{v, s}] = c[v] == s ? 1 : 0;
  }
  return z;
}

struct KeyPair {
  Graph public_graph;
  Coloring coloring;
  Point private_point;
};

inline bool VerifyZeroPoint(const std::vector<SparsePolynomial>& base, const Point& z) {
  for (const auto& q : base) {
    if (q.Eval(z) != 0) return false;
  }
  return true;
}

inline KeyPair Keygen(const Graph& g, const Coloring& c) {
  if (c.palette_size != kColors) {
    throw Error(ErrorKind::kInvalidKey, "private key must be a coloring over {0,1,2}");
  }
  if (!ValidateColoring(g, c)) {
    throw Error(ErrorKind::kInvalidKey, "coloring is not proper");
  }
  return {g, c, ZeroPoint(c)};
}

struct EncryptParams {
  int max_base_elems = 5;
  int max_terms = 3;
  int max_degree = 2;
};

// C = m + sum_i h_i * q_i with q_i drawn from the base (with replacement) and
// random sparse h_i with nonzero coefficients.
template <UniformSource Source>
SparsePolynomial Encrypt(const std::vector<SparsePolynomial>& base, FieldElement message,
                         const EncryptParams& params, Source& source) {
  if (base.empty()) throw Error(ErrorKind::kInvalidArgument, "empty public base");
  if (params.max_base_elems < 0 || params.max_terms < 1 || params.max_degree < 0) {
    throw Error(ErrorKind::kInvalidArgument, "encryption bounds out of range");
  }
  const FieldElement p = base.front().modulus();
  if (message >= p) {
    throw Error(ErrorKind::kInvalidArgument,
                "message " + std::to_string(message) + " outside Z_" + std::to_string(p));
  }
  std::set<Variable> pool_set;
  for (const auto& q : base) {
    if (q.modulus() != p) throw Error(ErrorKind::kInvalidArgument, "mixed fields in base");
    for (const auto& [mono, coeff] : q.terms()) {
      for (const auto& factor : mono) pool_set.insert(factor.first);
    }
  }
  const std::vector<Variable> pool(pool_set.begin(), pool_set.end());

  SparsePolynomial cipher = SparsePolynomial::Constant(p, message);
  const int count = params.max_base_elems == 0
                        ? 0
                        : 1 + static_cast<int>(source.Uniform(
                                  static_cast<std::uint32_t>(params.max_base_elems)));
  for (int i = 0; i < count; ++i) {
    const auto& q = base[source.Uniform(static_cast<std::uint32_t>(base.size()))];
    SparsePolynomial h(p);
    const int terms =
        1 + static_cast<int>(source.Uniform(static_cast<std::uint32_t>(params.max_terms)));
    for (int j = 0; j < terms; ++j) {
      const int degree = static_cast<int>(
          source.Uniform(static_cast<std::uint32_t>(params.max_degree + 1)));
      Monomial mono;
      for (int d = 0; d < degree; ++d) {
        const Variable var = pool[source.Uniform(static_cast<std::uint32_t>(pool.size()))];
        mono = MultiplyMonomials(mono, Monomial{{var, 1}});
      }
      h.AddTerm(mono, 1 + source.Uniform(p - 1));
    }
    cipher = cipher + h * q;
  }
  return cipher;
}

inline FieldElement Decrypt(const SparsePolynomial& cipher, const Point& z) {
  return cipher.Eval(z);
}

}  // namespace graphshare::polly
