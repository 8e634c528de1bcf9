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

#include "zxopt/gflow.hpp"

#include <algorithm>
#include <ranges>

#include <json.hpp>

#include "zxopt/error.hpp"
#include "zxopt/mat2.hpp"
#include "zxopt/rules.hpp"

namespace zxopt {

const char* plane_name(MeasurementPlane p) {
  switch (p) {
    case MeasurementPlane::XY: return "XY";
    case MeasurementPlane::XZ: return "XZ";
    case MeasurementPlane::YZ: return "YZ";
  }
  return "?";
}

void LabelledOpenGraph::add_edge(Vertex a, Vertex b) {
  if (a == b) throw Error(ErrorKind::Form, "self-loop in labelled open graph");
  adj[a].insert(b);
  adj[b].insert(a);
}

void LabelledOpenGraph::validate() const {
  for (Vertex v : inputs) {
    if (!contains(v)) throw Error(ErrorKind::Form, "input is not a vertex");
  }
  for (Vertex v : outputs) {
    if (!contains(v)) throw Error(ErrorKind::Form, "output is not a vertex");
  }
  for (const auto& [v, nb] : adj) {
    if (!outputs.count(v) && !plane.count(v)) {
      throw Error(ErrorKind::Form, "vertex " + std::to_string(v) + " has no measurement plane");
    }
    for (Vertex w : nb) {
      if (!contains(w) || !adj.at(w).count(v)) throw Error(ErrorKind::Form, "asymmetric edge set");
    }
  }
}

VertexSet odd_neighborhood(const LabelledOpenGraph& G, const VertexSet& A) {
  VertexSet out;
  for (Vertex a : A) {
    for (Vertex u : G.neighbors(a)) {
      if (!out.erase(u)) out.insert(u);
    }
  }
  return out;
}

LabelledOpenGraph diagram_to_log(const ZxDiagram& d) {
  std::string why = graph_like_violation(d);
  if (!why.empty()) throw Error(ErrorKind::Form, "diagram is not graph-like: " + why);
  LabelledOpenGraph G;
  std::map<Vertex, Vertex> leaf_of;  // hub -> leaf
  VertexSet leaves;
  VertexSet xz;
  for (const GadgetView& gv : gadgets(d, true)) {
    leaf_of[gv.hub] = gv.leaf;
    leaves.insert(gv.leaf);
  }
  // A leaf on a hub of phase +-pi/2 (left by a local complementation next to
  // a gadget) makes the hub an XZ vertex.
  for (Vertex v : d.vertices()) {
    if (!d.is_spider(v) || !d.phase(v).is_proper_clifford() || d.degree(v) < 2 || !has_only_h_edges(d, v)) {
      continue;
    }
    for (const auto& [w, kind] : d.neighbors(v)) {
      if (d.degree(w) == 1 && !leaves.count(w)) {
        leaf_of[v] = w;
        leaves.insert(w);
        xz.insert(v);
        break;
      }
    }
  }
  for (Vertex v : d.vertices()) {
    if (d.is_boundary(v) || leaves.count(v)) continue;
    G.add_vertex(v);
    G.plane[v] = xz.count(v)       ? MeasurementPlane::XZ
                 : leaf_of.count(v) ? MeasurementPlane::YZ
                                    : MeasurementPlane::XY;
  }
  for (Vertex v : G.adj | std::views::keys) {
    for (const auto& [w, kind] : d.neighbors(v)) {
      if (d.is_boundary(w)) {
        bool is_input = std::find(d.inputs().begin(), d.inputs().end(), w) != d.inputs().end();
        (is_input ? G.inputs : G.outputs).insert(v);
        continue;
      }
      if (leaves.count(w)) continue;
      if (leaf_of.count(v) && leaf_of.count(w)) {
        throw Error(ErrorKind::Form, "gadgets " + std::to_string(v) + " and " + std::to_string(w) +
                                         " are adjacent; not in phase-gadget form");
      }
      if (v < w) G.add_edge(v, w);
    }
  }
  for (Vertex v : G.outputs) G.plane.erase(v);
  for (Vertex v : G.inputs) {
    if (leaf_of.count(v)) throw Error(ErrorKind::Form, "gadget touches a boundary");
  }
  return G;
}

std::optional<GFlow> find_gflow(const LabelledOpenGraph& G) {
  G.validate();
  GFlow gf;
  VertexSet processed;
  for (Vertex v : G.outputs) {
    processed.insert(v);
    gf.layer[v] = 0;
  }
  VertexSet pending;
  for (Vertex v : G.adj | std::views::keys) {
    if (!processed.count(v)) pending.insert(v);
  }
  for (std::size_t k = 1; !pending.empty(); ++k) {
    std::vector<Vertex> cand;  // correction candidates: processed non-inputs
    for (Vertex w : processed) {
      if (!G.inputs.count(w)) cand.push_back(w);
    }
    std::vector<Vertex> rows(pending.begin(), pending.end());
    Mat2 a(rows.size(), cand.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cand.size(); ++j) a.set(i, j, G.neighbors(rows[i]).count(cand[j]) != 0);
    }
    VertexSet solved;
    for (Vertex v : rows) {
      MeasurementPlane p = G.plane.at(v);
      if (p != MeasurementPlane::XY && G.inputs.count(v)) continue;  // v would correct itself
      const VertexSet& nv = G.neighbors(v);
      std::vector<std::uint8_t> b(rows.size(), 0);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        bool self = rows[i] == v;
        bool adj = nv.count(rows[i]) != 0;
        switch (p) {
          case MeasurementPlane::XY: b[i] = self; break;
          case MeasurementPlane::XZ: b[i] = self ^ adj; break;
          case MeasurementPlane::YZ: b[i] = adj; break;
        }
      }
      auto x = solve_gf2(a, b);
      if (!x) continue;
      VertexSet g;
      for (std::size_t j = 0; j < cand.size(); ++j) {
        if ((*x)[j]) g.insert(cand[j]);
      }
      if (p != MeasurementPlane::XY) g.insert(v);
      gf.g[v] = std::move(g);
      gf.layer[v] = k;
      solved.insert(v);
    }
    if (solved.empty()) return std::nullopt;
    for (Vertex v : solved) {
      pending.erase(v);
      processed.insert(v);
    }
  }
  return gf;
}

bool verify_gflow(const LabelledOpenGraph& G, const GFlow& gf) {
  for (Vertex v : G.adj | std::views::keys) {
    if (!gf.layer.count(v)) return false;
  }
  for (const auto& [v, lv] : gf.layer) {
    if (!G.contains(v)) return false;
  }
  for (Vertex v : G.adj | std::views::keys) {
    if (G.outputs.count(v)) continue;
    auto it = gf.g.find(v);
    if (it == gf.g.end()) return false;
    const VertexSet& g = it->second;
    std::size_t lv = gf.layer.at(v);
    for (Vertex w : g) {
      if (!G.contains(w) || G.inputs.count(w)) return false;
      if (w != v && gf.layer.at(w) >= lv) return false;
    }
    VertexSet odd = odd_neighborhood(G, g);
    for (Vertex w : odd) {
      if (w != v && gf.layer.at(w) >= lv) return false;
    }
    bool in_g = g.count(v) != 0;
    bool in_odd = odd.count(v) != 0;
    switch (G.plane.at(v)) {
      case MeasurementPlane::XY:
        if (in_g || !in_odd) return false;
        break;
      case MeasurementPlane::XZ:
        if (!in_g || !in_odd) return false;
        break;
      case MeasurementPlane::YZ:
        if (!in_g || in_odd) return false;
        break;
    }
  }
  return true;
}

namespace {

bool is_xy(const LabelledOpenGraph& G, Vertex w) {
  auto it = G.plane.find(w);
  return it != G.plane.end() && it->second == MeasurementPlane::XY;
}

/** The highest-layer vertex that breaks focus for v, if any. */
std::optional<Vertex> focus_violation(const LabelledOpenGraph& G, const GFlow& gf, Vertex v) {
  std::optional<Vertex> worst;
  auto consider = [&](Vertex w) {
    if (!worst || gf.layer.at(w) > gf.layer.at(*worst) ||
        (gf.layer.at(w) == gf.layer.at(*worst) && w < *worst)) {
      worst = w;
    }
  };
  const VertexSet& g = gf.g.at(v);
  for (Vertex w : g) {
    if (w != v && !G.outputs.count(w) && !is_xy(G, w)) consider(w);
  }
  for (Vertex w : odd_neighborhood(G, g)) {
    if (w != v && !G.outputs.count(w) && is_xy(G, w)) consider(w);
  }
  return worst;
}

}  // namespace

bool is_focused(const LabelledOpenGraph& G, const GFlow& gf) {
  for (const auto& [v, g] : gf.g) {
    if (focus_violation(G, gf, v)) return false;
  }
  return true;
}

GFlow focus_gflow(const LabelledOpenGraph& G, const GFlow& gf) {
  if (!verify_gflow(G, gf)) throw Error(ErrorKind::Contract, "focus_gflow needs a valid gflow");
  GFlow out = gf;
  std::vector<Vertex> order;
  for (const auto& [v, g] : out.g) order.push_back(v);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return out.layer.at(a) < out.layer.at(b); });
  for (Vertex v : order) {
    while (auto w = focus_violation(G, out, v)) {
      VertexSet& g = out.g[v];
      for (Vertex x : out.g.at(*w)) {
        if (!g.erase(x)) g.insert(x);
      }
    }
  }
  return out;
}

std::string gflow_to_json(const GFlow& gf) {
  nlohmann::json j;
  j["layer"] = nlohmann::json::object();
  for (const auto& [v, l] : gf.layer) j["layer"][std::to_string(v)] = l;
  j["g"] = nlohmann::json::object();
  for (const auto& [v, g] : gf.g) j["g"][std::to_string(v)] = std::vector<Vertex>(g.begin(), g.end());
  return j.dump();
}

}  // namespace zxopt
