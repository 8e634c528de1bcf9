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

#include <optional>
#include <string>
#include <vector>

#include "zxopt/diagram.hpp"

namespace zxopt {

/** A phase gadget: phase-free hub, arity-1 leaf carrying the phase, and targets. */
struct GadgetView {
  Vertex hub = 0;
  Vertex leaf = 0;
  std::vector<Vertex> targets;
};

bool is_boundary_adjacent(const ZxDiagram& d, Vertex v);
/** A spider with no boundary neighbour. */
bool is_internal(const ZxDiagram& d, Vertex v);
/** True if every edge at v is a Hadamard edge to a Z spider. */
bool has_only_h_edges(const ZxDiagram& d, Vertex v);
/** With allow_pi_hub, a hub of phase pi (a gadget awaiting normalization) also counts. */
std::optional<GadgetView> gadget_at_hub(const ZxDiagram& d, Vertex hub, bool allow_pi_hub = false);
bool is_leaf(const ZxDiagram& d, Vertex v);
bool is_gadget_part(const ZxDiagram& d, Vertex v);
/** All gadgets, ordered by hub id. */
std::vector<GadgetView> gadgets(const ZxDiagram& d, bool allow_pi_hub = false);
/** Reports the first violation of graph-like form, or an empty string. */
std::string graph_like_violation(const ZxDiagram& d);

// Primitive rewrites. Each records itself in the diagram's trace (if attached)
// and preserves the interpretation including the scalar.

void apply_color_change(ZxDiagram& d, Vertex v);
/** Fuses v into u along a Simple edge. */
void apply_fuse(ZxDiagram& d, Vertex u, Vertex v);
void apply_remove_identity(ZxDiagram& d, Vertex v);
/** Splits the edge v-b into v -H- w -(kind')- b with a fresh phase-free w; returns w. */
Vertex apply_unfuse_boundary(ZxDiagram& d, Vertex v, Vertex b);
/** Replaces a bare boundary-boundary wire by two phase-free spiders. */
void apply_split_wire(ZxDiagram& d, Vertex b1, Vertex b2);
void apply_lc(ZxDiagram& d, Vertex v);
void apply_pivot(ZxDiagram& d, Vertex u, Vertex v);
/** Hub with phase pi becomes hub with phase 0 and negated leaf. */
void apply_normalize_hub(ZxDiagram& d, Vertex hub);
/** Moves w's phase onto a new gadget hanging off w; returns the new hub. */
Vertex apply_unfuse_gadget(ZxDiagram& d, Vertex w);
void apply_gadgetize_internal(ZxDiagram& d, Vertex u, Vertex w);
void apply_gadgetize_boundary(ZxDiagram& d, Vertex u, Vertex w);
/** Merges the gadget at h2 into the gadget at h1 (equal target sets). */
void apply_gadget_merge(ZxDiagram& d, Vertex h1, Vertex h2);
/** Single-target gadget collapses into its target. */
void apply_gadget_single(ZxDiagram& d, Vertex hub);
/** Removes a gadget whose leaf phase is Clifford. */
void apply_gadget_copy(ZxDiagram& d, Vertex hub);
/** Folds an isolated spider or an isolated Hadamard-connected pair into the scalar. */
void apply_fold_component(ZxDiagram& d, Vertex v);

// Matchers: pairwise vertex-disjoint, ascending anchor id.

struct PivotMatch {
  Vertex u = 0;
  Vertex v = 0;
};

std::vector<Vertex> match_fuse(const ZxDiagram& d);  // flattened (u, v) pairs
std::vector<Vertex> match_identity(const ZxDiagram& d);
std::vector<Vertex> match_lc(const ZxDiagram& d);
std::vector<PivotMatch> match_pivot(const ZxDiagram& d);
std::vector<PivotMatch> match_gadgetize_internal(const ZxDiagram& d);
std::vector<PivotMatch> match_gadgetize_boundary(const ZxDiagram& d);
/** Groups of hubs whose gadgets share a target set (each group size >= 2). */
std::vector<std::vector<Vertex>> match_gadget_merge(const ZxDiagram& d);
std::vector<Vertex> match_gadget_single(const ZxDiagram& d);
std::vector<Vertex> match_gadget_copy(const ZxDiagram& d);

bool lc_applies(const ZxDiagram& d, Vertex v);
bool pivot_applies(const ZxDiagram& d, Vertex u, Vertex v);

// Rule drivers, each run to a fixed point; they return the number of rewrites.

void to_graph_like(ZxDiagram& d);
std::size_t basic_cleanup(ZxDiagram& d);
std::size_t lc_simp(ZxDiagram& d);
std::size_t pivot_simp(ZxDiagram& d);
/** Rule (b) then rule (g). */
std::size_t gadgetize(ZxDiagram& d);
/** With clifford_only, partners with a non-Clifford phase are left alone. */
std::size_t gadgetize_boundary(ZxDiagram& d, bool clifford_only = false);
std::size_t gadgetize_internal(ZxDiagram& d);
/** Rule (a1) then rule (a2). */
std::size_t gadget_fuse(ZxDiagram& d);
std::size_t gadget_merge_simp(ZxDiagram& d);
std::size_t gadget_single_simp(ZxDiagram& d);
std::size_t copy_simp(ZxDiagram& d);
/**
 * Folds isolated spiders and isolated pairs. With exact_only, only folds with an
 * exact closed form (and none that would drop a tagged non-Clifford phase).
 */
std::size_t fold_scalar_components(ZxDiagram& d, bool exact_only = true);

/** Re-applies a recorded trace entry by entry. Throws Error(Contract) on mismatch. */
void replay_trace(ZxDiagram& d, const RewriteTrace& trace);
std::string trace_to_json(const RewriteTrace& trace);

}  // namespace zxopt
