// Copyright 2026 The zxopt Authors
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

#include <gtest/gtest.h>

#include "rule_catalog.hpp"
#include "test_support.hpp"
#include "zxopt/error.hpp"
#include "zxopt/verify.hpp"

namespace zxopt {
namespace {

using testing::random_diagram;
using testing::RandomDiagramOptions;

// Reference for a second edge v-w of the given kind: route it through
// phase-free identity spiders so the oracle never sees a parallel edge.
ZxDiagram with_routed_edge(const ZxDiagram& d, Vertex v, Vertex w, EdgeKind k) {
  ZxDiagram r = d;
  Vertex m1 = r.add_vertex(VertexKind::Z);
  Vertex m2 = r.add_vertex(VertexKind::Z);
  r.add_edge(v, m1, EdgeKind::Simple);
  r.add_edge(m1, m2, k);
  r.add_edge(m2, w, EdgeKind::Simple);
  return r;
}

TEST(Diagram, AddEdgeResolvingMatchesRoutedEdge) {
  int parallel = 0;
  for (std::uint32_t seed = 0; seed < 120; ++seed) {
    RandomDiagramOptions o;
    o.inputs = 1;
    o.outputs = 1;
    o.spiders = 4;
    o.graph_like = seed % 2 == 0;
    o.gadgets = 0;
    ZxDiagram d = random_diagram(seed, o);
    std::vector<Vertex> sp;
    for (Vertex v : d.vertices()) {
      if (d.is_spider(v)) sp.push_back(v);
    }
    for (EdgeKind k : {EdgeKind::Simple, EdgeKind::Hadamard}) {
      for (std::size_t i = 0; i < sp.size(); ++i) {
        for (std::size_t j = i; j < sp.size(); ++j) {
          Vertex v = sp[i], w = sp[j];
          ZxDiagram e = d;
          e.add_edge_resolving(v, w, k);
          parallel += d.connected(v, w);
          EXPECT_LT(to_tensor(with_routed_edge(d, v, w, k)).max_abs_diff(to_tensor(e)), 1e-9)
              << "seed " << seed << " " << v << "-" << w;
        }
      }
    }
  }
  EXPECT_GT(parallel, 100);
}

TEST(Diagram, BoundaryParallelEdgeIsAFormError) {
  ZxDiagram d;
  Vertex b = d.add_vertex(VertexKind::Boundary);
  Vertex z = d.add_vertex(VertexKind::Z);
  d.add_edge(b, z, EdgeKind::Simple);
  try {
    d.add_edge_resolving(b, z, EdgeKind::Simple);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Form);
  }
  EXPECT_THROW(d.add_edge_resolving(b, b, EdgeKind::Simple), Error);
}

TEST(Diagram, JsonRoundTrip) {
  for (std::uint32_t seed = 0; seed < 30; ++seed) {
    RandomDiagramOptions o;
    o.graph_like = seed % 2;
    ZxDiagram d = random_diagram(seed, o);
    d.scalar().add_power(3);
    d.scalar().add_phase(Phase(5, 4));
    std::string text = diagram_to_json(d);
    ZxDiagram back = diagram_from_json(text);
    EXPECT_EQ(diagram_to_json(back), text);
    EXPECT_LT(to_tensor(d).max_abs_diff(to_tensor(back)), 1e-12);
  }
  EXPECT_THROW(diagram_from_json("{not json"), Error);
}

TEST(Diagram, ComposeMultipliesMaps) {
  for (std::uint32_t seed = 0; seed < 25; ++seed) {
    Circuit a = testing::random_circuit(seed, {3, 10, false, false});
    Circuit b = testing::random_circuit(seed + 1000, {3, 10, false, false});
    ZxDiagram ab = compose(circuit_to_diagram(a), circuit_to_diagram(b));
    DenseMap expect = circuit_unitary(b) * circuit_unitary(a);
    EXPECT_LT(expect.max_abs_diff(to_tensor(ab)), 1e-9) << seed;
  }
  ZxDiagram one = circuit_to_diagram(testing::random_circuit(1, {1, 3, false, false}));
  ZxDiagram two = circuit_to_diagram(testing::random_circuit(1, {2, 3, false, false}));
  EXPECT_THROW(compose(one, two), Error);
}

TEST(Diagram, AdjointIsConjugateTranspose) {
  for (std::uint32_t seed = 0; seed < 25; ++seed) {
    RandomDiagramOptions o;
    o.inputs = 1 + seed % 2;
    o.outputs = 2;
    o.graph_like = seed % 3 == 0;
    ZxDiagram d = random_diagram(seed, o);
    d.scalar().add_phase(Phase(1, 4));
    EXPECT_LT(to_tensor(d).adjoint().max_abs_diff(to_tensor(adjoint_diagram(d))), 1e-9) << seed;
  }
}

TEST(Diagram, InvariantsAndRemoval) {
  ZxDiagram d;
  Vertex a = d.add_vertex(VertexKind::Z, Phase::quarter_pi());
  Vertex b = d.add_vertex(VertexKind::X);
  d.add_edge(a, b, EdgeKind::Hadamard);
  EXPECT_EQ(d.check_invariants(), "");
  EXPECT_EQ(d.num_edges(), 1u);
  EXPECT_EQ(d.non_clifford_count(), 1u);
  d.remove_vertex(b);
  EXPECT_FALSE(d.contains(b));
  EXPECT_EQ(d.degree(a), 0u);
  EXPECT_EQ(d.num_vertices(), 1u);
  EXPECT_THROW(d.phase(b), Error);
}

}  // namespace
}  // namespace zxopt
