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

#include <map>

#include "rule_catalog.hpp"
#include "zxopt/error.hpp"
#include "zxopt/rules.hpp"
#include "zxopt/verify.hpp"

namespace zxopt {
namespace {

using testing::random_diagram;
using testing::RandomDiagramOptions;
using testing::rule_sites;

RandomDiagramOptions options_for(std::uint32_t seed) {
  RandomDiagramOptions o;
  o.inputs = seed % 4;
  o.outputs = (seed / 4) % 4;
  o.spiders = 3 + seed % 5;
  o.graph_like = seed % 3 != 0;
  o.gadgets = seed % 3;
  return o;
}

TEST(RuleSoundness, EveryRuleKeepsTheTensorExactly) {
  std::map<std::string, int> applied;
  for (std::uint32_t seed = 0; seed < 300; ++seed) {
    ZxDiagram d = random_diagram(seed, options_for(seed));
    DenseMap before = to_tensor(d);
    for (const auto& site : rule_sites(d)) {
      ZxDiagram e = d;
      try {
        site.apply(e);
      } catch (const Error& err) {
        ASSERT_EQ(err.kind(), ErrorKind::Contract) << site.rule << ": " << err.what();
        continue;
      }
      EXPECT_EQ(e.check_invariants(), "") << site.rule << " seed " << seed;
      DenseMap after = to_tensor(e);
      ASSERT_EQ(after.rows, before.rows);
      ASSERT_EQ(after.cols, before.cols);
      EXPECT_LT(before.max_abs_diff(after), 1e-9) << site.rule << " seed " << seed;
      ++applied[site.rule];
    }
  }
  for (const char* rule : {"color_change", "fuse", "remove_identity", "unfuse_boundary", "split_wire",
                           "lc", "pivot", "normalize_hub", "unfuse_gadget", "gadgetize_internal",
                           "gadgetize_boundary", "gadget_merge", "gadget_single", "gadget_copy",
                           "fold_component"}) {
    EXPECT_GT(applied[rule], 0) << rule << " never found a site";
  }
}

TEST(RuleSoundness, DriversKeepTheTensorExactly) {
  for (std::uint32_t seed = 0; seed < 60; ++seed) {
    ZxDiagram d = random_diagram(seed, options_for(seed));
    DenseMap before = to_tensor(d);
    to_graph_like(d);
    EXPECT_EQ(graph_like_violation(d), "") << seed;
    lc_simp(d);
    pivot_simp(d);
    gadgetize(d);
    gadget_fuse(d);
    copy_simp(d);
    fold_scalar_components(d, false);
    EXPECT_LT(before.max_abs_diff(to_tensor(d)), 1e-9) << seed;
  }
}

// Two wires joined by a gadget whose leaf is pi/2. The copy rule moves the
// leaf phase onto both targets with the same sign and complements the pair.
TEST(RuleScalars, CopyHalfPi) {
  ZxDiagram d;
  Vertex i0 = d.add_vertex(VertexKind::Boundary);
  Vertex i1 = d.add_vertex(VertexKind::Boundary);
  Vertex a = d.add_vertex(VertexKind::Z);
  Vertex b = d.add_vertex(VertexKind::Z);
  Vertex o0 = d.add_vertex(VertexKind::Boundary);
  Vertex o1 = d.add_vertex(VertexKind::Boundary);
  Vertex hub = d.add_vertex(VertexKind::Z);
  Vertex leaf = d.add_vertex(VertexKind::Z, Phase::half_pi());
  d.add_edge(i0, a, EdgeKind::Simple);
  d.add_edge(a, o0, EdgeKind::Simple);
  d.add_edge(i1, b, EdgeKind::Simple);
  d.add_edge(b, o1, EdgeKind::Simple);
  d.add_edge(hub, a, EdgeKind::Hadamard);
  d.add_edge(hub, b, EdgeKind::Hadamard);
  d.add_edge(hub, leaf, EdgeKind::Hadamard);
  d.set_inputs({i0, i1});
  d.set_outputs({o0, o1});
  DenseMap before = to_tensor(d);
  apply_gadget_copy(d, hub);
  EXPECT_FALSE(d.contains(hub));
  EXPECT_FALSE(d.contains(leaf));
  EXPECT_EQ(d.phase(a), Phase::half_pi());
  EXPECT_EQ(d.phase(b), Phase::half_pi());
  EXPECT_EQ(d.edge_kind(a, b), EdgeKind::Hadamard);
  EXPECT_LT(before.max_abs_diff(to_tensor(d)), 1e-12);
}

TEST(RuleScalars, CopyPauliLeafHasNoComplement) {
  ZxDiagram d;
  Vertex i0 = d.add_vertex(VertexKind::Boundary);
  Vertex a = d.add_vertex(VertexKind::Z);
  Vertex o0 = d.add_vertex(VertexKind::Boundary);
  Vertex hub = d.add_vertex(VertexKind::Z);
  Vertex leaf = d.add_vertex(VertexKind::Z, Phase::pi());
  d.add_edge(i0, a, EdgeKind::Simple);
  d.add_edge(a, o0, EdgeKind::Simple);
  d.add_edge(hub, a, EdgeKind::Hadamard);
  d.add_edge(hub, leaf, EdgeKind::Hadamard);
  d.set_inputs({i0});
  d.set_outputs({o0});
  DenseMap before = to_tensor(d);
  apply_gadget_copy(d, hub);
  EXPECT_EQ(d.phase(a), Phase::pi());
  EXPECT_LT(before.max_abs_diff(to_tensor(d)), 1e-12);
}

TEST(Rules, WrongSiteIsAContractError) {
  ZxDiagram d;
  Vertex z = d.add_vertex(VertexKind::Z, Phase::quarter_pi());
  try {
    apply_color_change(d, z);
    FAIL() << "expected a Contract error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Contract);
  }
  EXPECT_THROW(apply_lc(d, z), Error);
  EXPECT_THROW(apply_gadget_copy(d, z), Error);
}

TEST(Rules, TraceReplayReproducesTheDiagram) {
  for (std::uint32_t seed = 0; seed < 40; ++seed) {
    ZxDiagram d = random_diagram(seed, options_for(seed));
    ZxDiagram fresh = d;
    RewriteTrace trace;
    d.attach_trace(&trace);
    to_graph_like(d);
    lc_simp(d);
    pivot_simp(d);
    copy_simp(d);
    d.attach_trace(nullptr);
    replay_trace(fresh, trace);
    EXPECT_EQ(diagram_to_json(fresh), diagram_to_json(d)) << seed;
  }
}

}  // namespace
}  // namespace zxopt
