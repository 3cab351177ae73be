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


#include "graphshare/vertex_types.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "graphshare/oracle.hpp"
#include "test_graphs.hpp"

namespace graphshare {
namespace {

using testing::Example5ColoringZ3;
using testing::Example5Graph;

TEST(ClassifyVerticesTest, ExampleFive) {
  const auto classes = ClassifyVertices(Example5Graph(), 3);
  EXPECT_EQ(VerticesOfKind(classes, VertexKind::kTypeI), (std::vector<Vertex>{2, 3, 5, 6}));
  EXPECT_EQ(VerticesOfKind(classes, VertexKind::kTypeII), (std::vector<Vertex>{0, 1, 4, 7}));
  for (Vertex v : {0, 1, 4, 7}) EXPECT_EQ(classes[v].dof, 2);
  for (Vertex v : {2, 3, 5, 6}) EXPECT_EQ(classes[v].dof, 1);
  EXPECT_NO_THROW(CheckSharingEligibility(Example5Graph(), classes));
}

TEST(ClassifyVerticesTest, TriangleIsAllTypeOne) {
  for (const auto& c : ClassifyVertices(CompleteGraph(3), 3)) {
    EXPECT_EQ(c, (VertexClass{VertexKind::kTypeI, 1}));
  }
}

TEST(ClassifyVerticesTest, ExampleThreeSlackVertex) {
  const auto classes = ClassifyVertices(testing::Example3Graph(), 3);
  EXPECT_EQ(classes[4].kind, VertexKind::kTypeIII);
  EXPECT_FALSE(classes[4].dof.has_value());
  EXPECT_THROW(CheckSharingEligibility(testing::Example3Graph(), classes), Error);
}

TEST(ClassifyVerticesTest, FreeVertexAndInfeasible) {
  try {
    ClassifyVertices(JoinGraphs(CompleteGraph(2), Graph(1), {}), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIneligible);
    EXPECT_NE(std::string(e.what()).find("v3"), std::string::npos);
  }
  try {
    ClassifyVertices(CompleteGraph(4), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInfeasible);
  }
}

// Independent re-derivation from per-coloring degrees of freedom.
TEST(ClassifyVerticesTest, AgreesWithDegreeOfFreedomOnAllSmallGraphs) {
  for (std::size_t m = 2; m <= 6; ++m) {
    for (const auto& small : testing::AllGraphsOn(m)) {
      const Graph g = small.ToGraph();
      const int n = oracle::ChromaticNumber(g);
      std::vector<std::set<int>> dofs(m);
      for (const Coloring& c : oracle::EnumerateProperColorings(g, n))
        for (Vertex v = 0; v < m; ++v) dofs[v].insert(oracle::DegreeOfFreedom(g, c, v, n));
      bool free_vertex = false;
      for (Vertex v = 0; v < m; ++v)
        free_vertex |= dofs[v].size() == 1 && *dofs[v].begin() == n && n > 1;
      if (free_vertex) {
        EXPECT_THROW(ClassifyVertices(g, n), Error);
        continue;
      }
      const auto classes = ClassifyVertices(g, n);
      for (Vertex v = 0; v < m; ++v) {
        if (dofs[v].size() > 1) {
          EXPECT_EQ(classes[v].kind, VertexKind::kTypeIII);
        } else if (*dofs[v].begin() == 1) {
          EXPECT_EQ(classes[v].kind, VertexKind::kTypeI);
        } else {
          EXPECT_EQ(classes[v], (VertexClass{VertexKind::kTypeII, *dofs[v].begin()}));
        }
      }
    }
  }
}

TEST(VerifyDeterminingTest, ExampleFive) {
  const std::vector<Vertex> type1 = {2, 3, 5, 6};
  const Graph g = Example5Graph();
  const Coloring c = Example5ColoringZ3();
  EXPECT_TRUE(VerifyDetermining(g, {2, 3, 6}, c, type1, 3));
  EXPECT_FALSE(VerifyDetermining(g, {2}, c, type1, 3));
  EXPECT_TRUE(VerifyDetermining(g, type1, c, type1, 3));
  // v4 and v6 share a color, so they leave v3 and v7 open.
  EXPECT_FALSE(VerifyDetermining(g, {3, 5}, c, type1, 3));
  // Not a subset of type I.
  EXPECT_FALSE(VerifyDetermining(g, {0, 2, 3}, c, type1, 3));
}

TEST(ReduceStructureTest, ExampleFiveGreedy) {
  const Graph g = Example5Graph();
  const auto classes = ClassifyVertices(g, 3);
  const ReducedStructure r = ReduceStructure(g, classes, Example5ColoringZ3(), 3);
  EXPECT_EQ(r.vertices, (std::vector<Vertex>{5, 6}));
  EXPECT_EQ(r.vertices.size(),
            oracle::MinDeterminingSet(g, {2, 3, 5, 6}, Example5ColoringZ3(), 3).size());
}

TEST(ReduceStructureTest, ExampleFiveKeepingAllColors) {
  const Graph g = Example5Graph();
  const auto classes = ClassifyVertices(g, 3);
  const ReducedStructure r = ReduceStructure(g, classes, Example5ColoringZ3(), 3,
                                             ReduceOptions{.keep_all_colors = true});
  EXPECT_EQ(r.vertices, (std::vector<Vertex>{2, 5, 6}));
}

TEST(ReduceStructureTest, AcceptsCallerSuppliedStructure) {
  const Graph g = Example5Graph();
  const auto classes = ClassifyVertices(g, 3);
  const ReducedStructure r =
      AcceptReducedStructure(g, classes, Example5ColoringZ3(), 3, {6, 2, 3});
  EXPECT_EQ(r.vertices, (std::vector<Vertex>{2, 3, 6}));
  EXPECT_THROW(AcceptReducedStructure(g, classes, Example5ColoringZ3(), 3, {2}), Error);
  EXPECT_THROW(AcceptReducedStructure(g, classes, Example5ColoringZ3(), 3, {0, 2, 3}), Error);
}

TEST(ReduceStructureTest, ExampleFourReducesToTriangle) {
  const Graph g = testing::Example4Graph();
  const auto classes = ClassifyVertices(g, 3);
  EXPECT_EQ(VerticesOfKind(classes, VertexKind::kTypeI).size(), 6u);
  const std::vector<Vertex> all = {0, 1, 2, 3, 4, 5};
  EXPECT_TRUE(VerifyDetermining(g, {0, 1, 2}, testing::Example4Coloring(), all, 3));
  EXPECT_NO_THROW(AcceptReducedStructure(g, classes, testing::Example4Coloring(), 3, {0, 1, 2}));
}

TEST(ReduceStructureTest, SingleTypeOneVertex) {
  // A star: the center is type I for n = 2, leaves keep 1 color too.
  const Graph g(2, {{0, 1}});
  const auto classes = ClassifyVertices(g, 2);
  const ReducedStructure r = ReduceStructure(g, classes, Coloring(2, {0, 1}), 2);
  EXPECT_EQ(r.vertices.size(), 1u);
  const Graph path(3, {{0, 1}, {1, 2}});
  const auto pc = ClassifyVertices(path, 2);
  EXPECT_EQ(ReduceStructure(path, pc, Coloring(2, {0, 1, 0}), 2).vertices,
            (std::vector<Vertex>{2}));
}

TEST(ReduceStructureTest, ValidAndLocallyMinimalOnSmallGraphs) {
  for (std::size_t m = 2; m <= 6; ++m) {
    for (const auto& small : testing::AllGraphsOn(m)) {
      const Graph g = small.ToGraph();
      const int n = oracle::ChromaticNumber(g);
      std::vector<VertexClass> classes;
      try {
        classes = ClassifyVertices(g, n);
      } catch (const Error&) {
        continue;
      }
      const auto type1 = VerticesOfKind(classes, VertexKind::kTypeI);
      const Coloring c = oracle::EnumerateProperColorings(g, n).front();
      const ReducedStructure r = ReduceStructure(g, classes, c, n);
      EXPECT_TRUE(VerifyDetermining(g, r.vertices, c, type1, n));
      for (std::size_t drop = 0; drop < r.vertices.size(); ++drop) {
        std::vector<Vertex> smaller = r.vertices;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
        EXPECT_FALSE(VerifyDetermining(g, smaller, c, type1, n));
      }
    }
  }
}

}  // namespace
}  // namespace graphshare
