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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zxopt/phase.hpp"
#include "zxopt/scalar.hpp"

namespace zxopt {

using Vertex = std::size_t;

enum class VertexKind { Boundary, Z, X };
enum class EdgeKind { Simple, Hadamard };

inline EdgeKind toggle(EdgeKind k) {
  return k == EdgeKind::Simple ? EdgeKind::Hadamard : EdgeKind::Simple;
}

/** Edge kind of the composite of two wires in series (H.H = identity). */
inline EdgeKind compose_kind(EdgeKind a, EdgeKind b) {
  return a == b ? EdgeKind::Simple : EdgeKind::Hadamard;
}

/** One primitive rewrite, identified by rule name and the vertices it was applied to. */
struct TraceEntry {
  std::string rule;
  std::vector<Vertex> payload;
  bool operator==(const TraceEntry&) const = default;
};
using RewriteTrace = std::vector<TraceEntry>;

/**
 * Symbolic phase variables for phase teleportation. A tagged vertex carries
 * sign * value(var) plus some Clifford constant.
 */
struct PhaseTable {
  std::vector<Phase> values;

  int new_var(const Phase& p) {
    values.push_back(p);
    return static_cast<int>(values.size()) - 1;
  }
  bool is_clifford(int var) const { return values.at(static_cast<std::size_t>(var)).is_clifford(); }
};

struct VertexData {
  VertexKind kind = VertexKind::Z;
  Phase phase;
  double row = 0.0;
  double col = 0.0;
  bool alive = true;
  int var = -1;
  int sign = 1;
  std::map<Vertex, EdgeKind> adj;
};

class ZxDiagram {
 public:
  ZxDiagram() = default;

  Vertex add_vertex(VertexKind kind, Phase phase = {}, double row = 0.0, double col = 0.0);
  /** Allocates a specific id (>= id_bound()); skipped ids stay dead. Used by loaders. */
  Vertex add_vertex_at(Vertex id, VertexKind kind, Phase phase = {}, double row = 0.0,
                       double col = 0.0);
  /** Removes v and all incident edges. */
  void remove_vertex(Vertex v);

  /**
   * Inserts an edge as if into a multigraph and restores simple-graph form,
   * adjusting phases and the scalar so the interpretation is unchanged.
   */
  void add_edge_resolving(Vertex v, Vertex w, EdgeKind kind);
  /** Plain insertion; the pair must not already be connected and v != w. */
  void add_edge(Vertex v, Vertex w, EdgeKind kind);
  void remove_edge(Vertex v, Vertex w);
  void set_edge_kind(Vertex v, Vertex w, EdgeKind kind);
  std::optional<EdgeKind> edge_kind(Vertex v, Vertex w) const;
  bool connected(Vertex v, Vertex w) const { return edge_kind(v, w).has_value(); }

  bool contains(Vertex v) const { return v < verts_.size() && verts_[v].alive; }
  const VertexData& data(Vertex v) const;
  VertexKind kind(Vertex v) const { return data(v).kind; }
  void set_kind(Vertex v, VertexKind k) { mut(v).kind = k; }
  const Phase& phase(Vertex v) const { return data(v).phase; }
  void set_phase(Vertex v, const Phase& p);
  /** Adds a Clifford constant; never moves tagged material. */
  void add_to_phase(Vertex v, const Phase& p);
  /** keep.phase += removed.phase, moving phase-variable tags accordingly. */
  void merge_phase(Vertex keep, Vertex removed);
  /** to.phase += from.phase; from.phase = 0; the tag moves along. */
  void transfer_phase(Vertex from, Vertex to);
  void negate_phase(Vertex v);
  void set_position(Vertex v, double row, double col);

  const std::map<Vertex, EdgeKind>& neighbors(Vertex v) const { return data(v).adj; }
  std::vector<Vertex> neighbor_list(Vertex v) const;
  std::size_t degree(Vertex v) const { return data(v).adj.size(); }
  bool is_boundary(Vertex v) const { return kind(v) == VertexKind::Boundary; }
  bool is_spider(Vertex v) const { return kind(v) != VertexKind::Boundary; }

  /** Live vertex ids in ascending order. */
  std::vector<Vertex> vertices() const;
  std::size_t num_vertices() const { return alive_; }
  std::size_t num_edges() const;
  /** One past the largest id ever allocated. */
  std::size_t id_bound() const { return verts_.size(); }

  const std::vector<Vertex>& inputs() const { return inputs_; }
  const std::vector<Vertex>& outputs() const { return outputs_; }
  void set_inputs(std::vector<Vertex> v) { inputs_ = std::move(v); }
  void set_outputs(std::vector<Vertex> v) { outputs_ = std::move(v); }

  Scalar& scalar() { return scalar_; }
  const Scalar& scalar() const { return scalar_; }

  void attach_trace(RewriteTrace* trace) { trace_ = trace; }
  RewriteTrace* trace() const { return trace_; }
  void record(const std::string& rule, std::vector<Vertex> payload);
  void attach_phase_table(PhaseTable* table) { table_ = table; }
  PhaseTable* phase_table() const { return table_; }
  void tag(Vertex v, int var, int sign = 1);

  /** Number of spiders whose phase is not a multiple of pi/2. */
  std::size_t non_clifford_count() const;

  /** Checks the structural invariants; returns an empty string when they hold. */
  std::string check_invariants() const;

 private:
  VertexData& mut(Vertex v);
  bool kind_of_same_colour(Vertex v, Vertex w) const;
  void connect(Vertex v, Vertex w, EdgeKind kind);

  std::vector<VertexData> verts_;
  std::size_t alive_ = 0;
  std::vector<Vertex> inputs_;
  std::vector<Vertex> outputs_;
  Scalar scalar_;
  RewriteTrace* trace_ = nullptr;
  PhaseTable* table_ = nullptr;
};

/** Glues outputs of a to inputs of b; interpretation is [[b]] . [[a]]. */
ZxDiagram compose(const ZxDiagram& a, const ZxDiagram& b);
/** Swaps inputs/outputs, negates phases and conjugates the scalar. */
ZxDiagram adjoint_diagram(const ZxDiagram& d);
/** Appends a copy of src to dst; returns the id map src -> dst. */
std::map<Vertex, Vertex> append_copy(ZxDiagram& dst, const ZxDiagram& src);

std::complex<double> scalar_value(const Scalar& s);

std::string diagram_to_json(const ZxDiagram& d);
ZxDiagram diagram_from_json(const std::string& text);

}  // namespace zxopt
