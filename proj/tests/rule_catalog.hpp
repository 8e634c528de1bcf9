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

// Random diagrams and a catalog of every rewrite with a way to find a site
// for it. Shared by the unit tests and the acceptance binary.

#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "zxopt/diagram.hpp"
#include "zxopt/error.hpp"
#include "zxopt/rules.hpp"

namespace zxopt::testing {

struct RandomDiagramOptions {
  std::size_t inputs = 2;
  std::size_t outputs = 2;
  std::size_t spiders = 5;
  double edge_probability = 0.4;
  /** Z spiders with Hadamard edges only; otherwise colours and edge kinds are mixed. */
  bool graph_like = true;
  std::size_t gadgets = 1;
  /** Adds an isolated spider or pair now and then. */
  bool scalar_debris = true;
  /** Wires one input straight to an output now and then. */
  bool bare_wires = true;
};

inline Phase random_phase(std::mt19937& rng) {
  int r = std::uniform_int_distribution<int>(0, 9)(rng);
  if (r < 4) return r % 2 ? Phase::pi() : Phase();
  if (r < 7) return r % 2 ? Phase::half_pi() : Phase(3, 2);
  return Phase(2 * std::uniform_int_distribution<int>(0, 3)(rng) + 1, 4);
}

inline ZxDiagram random_diagram(std::uint32_t seed, const RandomDiagramOptions& o) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::bernoulli_distribution edge(o.edge_probability);
  ZxDiagram d;
  std::vector<Vertex> spiders;
  for (std::size_t i = 0; i < o.spiders; ++i) {
    VertexKind k = (!o.graph_like && coin(rng)) ? VertexKind::X : VertexKind::Z;
    spiders.push_back(d.add_vertex(k, random_phase(rng), static_cast<double>(i % 3), static_cast<double>(i)));
  }
  auto kind = [&] { return o.graph_like || coin(rng) ? EdgeKind::Hadamard : EdgeKind::Simple; };
  for (std::size_t i = 0; i < spiders.size(); ++i) {
    for (std::size_t j = i + 1; j < spiders.size(); ++j) {
      if (edge(rng)) d.add_edge(spiders[i], spiders[j], kind());
    }
  }
  // Boundaries go to distinct spiders so graph-like inputs stay graph-like.
  std::vector<Vertex> free_spiders = spiders;
  std::shuffle(free_spiders.begin(), free_spiders.end(), rng);
  std::vector<Vertex> ins, outs;
  bool bare = o.bare_wires && o.inputs > 0 && o.outputs > 0 && std::bernoulli_distribution(0.2)(rng);
  for (std::size_t i = 0; i < o.inputs + o.outputs; ++i) {
    Vertex b = d.add_vertex(VertexKind::Boundary);
    (i < o.inputs ? ins : outs).push_back(b);
  }
  std::size_t next = 0;
  for (std::size_t i = 0; i < ins.size() + outs.size(); ++i) {
    Vertex b = i < ins.size() ? ins[i] : outs[i - ins.size()];
    if (bare && i == 0) {
      d.add_edge(b, outs.back(), coin(rng) ? EdgeKind::Hadamard : EdgeKind::Simple);
      continue;
    }
    if (bare && b == outs.back()) continue;
    if (next >= free_spiders.size()) {
      Vertex s = d.add_vertex(VertexKind::Z, random_phase(rng));
      d.add_edge(s, spiders[std::uniform_int_distribution<std::size_t>(0, spiders.size() - 1)(rng)],
                 EdgeKind::Hadamard);
      free_spiders.push_back(s);
    }
    d.add_edge(b, free_spiders[next++], coin(rng) ? EdgeKind::Hadamard : EdgeKind::Simple);
  }
  d.set_inputs(ins);
  d.set_outputs(outs);
  for (std::size_t g = 0; g < o.gadgets && spiders.size() >= 2; ++g) {
    std::vector<Vertex> pool = spiders;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::size_t arity = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(3, pool.size()))(rng);
    Vertex hub = d.add_vertex(VertexKind::Z, coin(rng) ? Phase() : Phase::pi());
    Vertex leaf = d.add_vertex(VertexKind::Z, random_phase(rng));
    d.add_edge(hub, leaf, EdgeKind::Hadamard);
    for (std::size_t i = 0; i < arity; ++i) {
      if (d.kind(pool[i]) == VertexKind::Z) d.add_edge(hub, pool[i], EdgeKind::Hadamard);
    }
    if (arity >= 2 && coin(rng)) {
      // A twin gadget on the same targets, so merging has something to do.
      Vertex hub2 = d.add_vertex(VertexKind::Z);
      Vertex leaf2 = d.add_vertex(VertexKind::Z, random_phase(rng));
      d.add_edge(hub2, leaf2, EdgeKind::Hadamard);
      for (const auto& [w, k] : d.neighbors(hub)) {
        if (w != leaf) d.add_edge(hub2, w, EdgeKind::Hadamard);
      }
    }
  }
  if (o.scalar_debris && coin(rng)) {
    Vertex a = d.add_vertex(VertexKind::Z, random_phase(rng));
    if (coin(rng)) d.add_edge(a, d.add_vertex(VertexKind::Z, random_phase(rng)), kind());
  }
  return d;
}

/** A rewrite applied at one site. */
struct RuleSite {
  std::string rule;
  std::function<void(ZxDiagram&)> apply;
};

/** Every rule that has a site in d, each at its first site. */
inline std::vector<RuleSite> rule_sites(const ZxDiagram& d) {
  std::vector<RuleSite> out;
  for (Vertex v : d.vertices()) {
    if (d.kind(v) == VertexKind::X) {
      out.push_back({"color_change", [v](ZxDiagram& x) { apply_color_change(x, v); }});
      break;
    }
  }
  if (auto m = match_fuse(d); m.size() >= 2) {
    out.push_back({"fuse", [u = m[0], v = m[1]](ZxDiagram& x) { apply_fuse(x, u, v); }});
  }
  if (auto m = match_identity(d); !m.empty()) {
    out.push_back({"remove_identity", [v = m[0]](ZxDiagram& x) { apply_remove_identity(x, v); }});
  }
  for (Vertex b : d.vertices()) {
    if (!d.is_boundary(b) || d.degree(b) != 1) continue;
    Vertex n = d.neighbors(b).begin()->first;
    if (d.is_spider(n)) {
      out.push_back({"unfuse_boundary", [n, b](ZxDiagram& x) { apply_unfuse_boundary(x, n, b); }});
    } else if (b < n) {
      out.push_back({"split_wire", [b, n](ZxDiagram& x) { apply_split_wire(x, b, n); }});
    }
  }
  if (auto m = match_lc(d); !m.empty()) {
    out.push_back({"lc", [v = m[0]](ZxDiagram& x) { apply_lc(x, v); }});
  }
  if (auto m = match_pivot(d); !m.empty()) {
    out.push_back({"pivot", [p = m[0]](ZxDiagram& x) { apply_pivot(x, p.u, p.v); }});
  }
  for (Vertex v : d.vertices()) {
    if (d.kind(v) != VertexKind::Z || d.phase(v) != Phase::pi()) continue;
    ZxDiagram probe = d;
    probe.set_phase(v, Phase());
    if (gadget_at_hub(probe, v)) {
      out.push_back({"normalize_hub", [v](ZxDiagram& x) { apply_normalize_hub(x, v); }});
      break;
    }
  }
  for (Vertex v : d.vertices()) {
    if (d.kind(v) == VertexKind::Z && !d.phase(v).is_zero()) {
      out.push_back({"unfuse_gadget", [v](ZxDiagram& x) { apply_unfuse_gadget(x, v); }});
      break;
    }
  }
  if (auto m = match_gadgetize_internal(d); !m.empty()) {
    out.push_back({"gadgetize_internal", [p = m[0]](ZxDiagram& x) { apply_gadgetize_internal(x, p.u, p.v); }});
  }
  if (auto m = match_gadgetize_boundary(d); !m.empty()) {
    out.push_back({"gadgetize_boundary", [p = m[0]](ZxDiagram& x) { apply_gadgetize_boundary(x, p.u, p.v); }});
  }
  if (auto m = match_gadget_merge(d); !m.empty()) {
    out.push_back({"gadget_merge", [a = m[0][0], b = m[0][1]](ZxDiagram& x) { apply_gadget_merge(x, a, b); }});
  }
  if (auto m = match_gadget_single(d); !m.empty()) {
    out.push_back({"gadget_single", [h = m[0]](ZxDiagram& x) { apply_gadget_single(x, h); }});
  }
  if (auto m = match_gadget_copy(d); !m.empty()) {
    out.push_back({"gadget_copy", [h = m[0]](ZxDiagram& x) { apply_gadget_copy(x, h); }});
  }
  for (Vertex v : d.vertices()) {
    if (!d.is_spider(v) || d.degree(v) > 1) continue;
    if (d.degree(v) == 1) {
      Vertex w = d.neighbors(v).begin()->first;
      if (!d.is_spider(w) || d.degree(w) != 1 || d.kind(w) != d.kind(v)) continue;
    }
    out.push_back({"fold_component", [v](ZxDiagram& x) { apply_fold_component(x, v); }});
    break;
  }
  return out;
}

}  // namespace zxopt::testing
