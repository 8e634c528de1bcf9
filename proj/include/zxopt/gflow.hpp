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

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zxopt/diagram.hpp"

namespace zxopt {

enum class MeasurementPlane { XY, XZ, YZ };

const char* plane_name(MeasurementPlane p);

using VertexSet = std::set<Vertex>;

/** Graph with inputs, outputs and a measurement plane on every non-output vertex. */
struct LabelledOpenGraph {
  std::map<Vertex, VertexSet> adj;
  VertexSet inputs;
  VertexSet outputs;
  std::map<Vertex, MeasurementPlane> plane;

  void add_vertex(Vertex v) { adj.try_emplace(v); }
  void add_edge(Vertex a, Vertex b);
  bool contains(Vertex v) const { return adj.count(v) != 0; }
  const VertexSet& neighbors(Vertex v) const { return adj.at(v); }
  /** Checks the structural invariants; throws Error(Form). */
  void validate() const;
};

struct GFlow {
  std::map<Vertex, VertexSet> g;
  /** Outputs sit in layer 0; a vertex in layer k is corrected only by lower layers. */
  std::map<Vertex, std::size_t> layer;
};

VertexSet odd_neighborhood(const LabelledOpenGraph& G, const VertexSet& A);

/**
 * Boundary-adjacent spiders become inputs and outputs; every gadget becomes a
 * single vertex carrying its hub's id, YZ for hubs of phase 0 or pi and XZ
 * for hubs of phase +-pi/2; other spiders are XY.
 */
LabelledOpenGraph diagram_to_log(const ZxDiagram& d);

/** Maximally delayed gflow by layer peeling, or nullopt when none exists. */
std::optional<GFlow> find_gflow(const LabelledOpenGraph& G);
bool verify_gflow(const LabelledOpenGraph& G, const GFlow& gf);
/** Rewrites correction sets until XY-only corrections and non-XY-only odd neighbourhoods. */
GFlow focus_gflow(const LabelledOpenGraph& G, const GFlow& gf);
bool is_focused(const LabelledOpenGraph& G, const GFlow& gf);

std::string gflow_to_json(const GFlow& gf);

}  // namespace zxopt
