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

#include "zxopt/rules.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <map>
#include <set>

#include "zxopt/error.hpp"

namespace zxopt {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw Error(ErrorKind::Contract, what);
}

bool is_z(const ZxDiagram& d, Vertex v) { return d.contains(v) && d.kind(v) == VertexKind::Z; }

std::vector<Vertex> sorted_difference(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Vertex> sorted_intersection(const std::vector<Vertex>& a,
                                        const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Vertex> without(std::vector<Vertex> a, Vertex x) {
  a.erase(std::remove(a.begin(), a.end(), x), a.end());
  return a;
}

/** Lowest-id degree-1 Z neighbour joined by a Hadamard edge. */
std::optional<Vertex> find_leaf(const ZxDiagram& d, Vertex h) {
  for (const auto& [w, k] : d.neighbors(h)) {
    if (k == EdgeKind::Hadamard && is_z(d, w) && d.degree(w) == 1) return w;
  }
  return std::nullopt;
}

bool hub_shape(const ZxDiagram& d, Vertex h) {
  return is_z(d, h) && d.degree(h) >= 2 && has_only_h_edges(d, h) && find_leaf(d, h).has_value();
}

// ----- non-recording rewrite bodies

void do_fuse(ZxDiagram& d, Vertex u, Vertex v) {
  d.remove_edge(u, v);
  d.merge_phase(u, v);
  auto nbrs = d.neighbors(v);
  for (const auto& [w, k] : nbrs) d.add_edge_resolving(u, w, k);
  d.remove_vertex(v);
}

Vertex do_unfuse_boundary(ZxDiagram& d, Vertex v, Vertex b) {
  EdgeKind k = *d.edge_kind(v, b);
  const auto& vd = d.data(v);
  const auto& bd = d.data(b);
  Vertex w = d.add_vertex(VertexKind::Z, {}, (vd.row + bd.row) / 2, (vd.col + bd.col) / 2);
  d.remove_edge(v, b);
  d.add_edge(v, w, EdgeKind::Hadamard);
  d.add_edge(w, b, toggle(k));
  return w;
}

void do_lc(ZxDiagram& d, Vertex v) {
  const Phase theta = d.phase(v);
  const std::vector<Vertex> nbrs = d.neighbor_list(v);
  const int n = static_cast<int>(nbrs.size());
  d.scalar().add_power(1 - n + n * (n - 1) / 2);
  d.scalar().add_phase(theta == Phase::half_pi() ? Phase::quarter_pi() : Phase(7, 4));
  d.remove_vertex(v);
  for (Vertex a : nbrs) d.add_to_phase(a, -theta);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      d.add_edge_resolving(nbrs[i], nbrs[j], EdgeKind::Hadamard);
    }
  }
}

void do_pivot(ZxDiagram& d, Vertex u, Vertex v) {
  const bool j = d.phase(u) == Phase::pi();
  const bool k = d.phase(v) == Phase::pi();
  const std::vector<Vertex> nu = without(d.neighbor_list(u), v);
  const std::vector<Vertex> nv = without(d.neighbor_list(v), u);
  const std::vector<Vertex> U = sorted_difference(nu, nv);
  const std::vector<Vertex> V = sorted_difference(nv, nu);
  const std::vector<Vertex> W = sorted_intersection(nu, nv);
  const int k0 = static_cast<int>(U.size());
  const int k1 = static_cast<int>(V.size());
  const int k2 = static_cast<int>(W.size());
  d.scalar().add_power(k0 * k1 + k0 * k2 + k1 * k2 - (k0 + k1 + 2 * k2 - 1));
  if (j && k) d.scalar().add_phase(Phase::pi());
  d.remove_vertex(u);
  d.remove_vertex(v);
  auto complement = [&](const std::vector<Vertex>& A, const std::vector<Vertex>& B) {
    for (Vertex a : A) {
      for (Vertex b : B) d.add_edge_resolving(a, b, EdgeKind::Hadamard);
    }
  };
  complement(U, V);
  complement(U, W);
  complement(V, W);
  if (k) {
    for (Vertex a : U) d.add_to_phase(a, Phase::pi());
  }
  if (j) {
    for (Vertex b : V) d.add_to_phase(b, Phase::pi());
  }
  if (!(j ^ k)) {
    for (Vertex c : W) d.add_to_phase(c, Phase::pi());
  }
}

void do_normalize_hub(ZxDiagram& d, Vertex h) {
  Vertex leaf = *find_leaf(d, h);
  d.add_to_phase(h, Phase::pi());
  d.scalar().add_phase(d.phase(leaf));
  d.negate_phase(leaf);
}

Vertex do_unfuse_gadget(ZxDiagram& d, Vertex w) {
  const auto& wd = d.data(w);
  double row = wd.row;
  double col = wd.col;
  Vertex x = d.add_vertex(VertexKind::Z, {}, row - 0.5, col);
  Vertex l = d.add_vertex(VertexKind::Z, {}, row - 1.0, col);
  d.add_edge(w, x, EdgeKind::Hadamard);
  d.add_edge(x, l, EdgeKind::Hadamard);
  d.transfer_phase(w, l);
  return x;
}

std::optional<Vertex> boundary_neighbor(const ZxDiagram& d, Vertex v) {
  for (const auto& [w, k] : d.neighbors(v)) {
    if (d.is_boundary(w)) return w;
  }
  return std::nullopt;
}

/** False if v carries a non-Clifford phase variable that a fold would lose. */
bool free_of_variables(const ZxDiagram& d, Vertex v) {
  const auto& vd = d.data(v);
  return !(d.phase_table() && vd.var >= 0 && !d.phase_table()->is_clifford(vd.var));
}

bool fold_is_exact(const ZxDiagram& d, Vertex v) {
  if (d.degree(v) == 0) return free_of_variables(d, v);
  Vertex w = d.neighbors(v).begin()->first;
  if (*d.edge_kind(v, w) == EdgeKind::Simple) return free_of_variables(d, v) && free_of_variables(d, w);
  return d.phase(v).is_pauli() || d.phase(w).is_pauli();
}

bool is_foldable(const ZxDiagram& d, Vertex v) {
  if (!d.contains(v) || !d.is_spider(v)) return false;
  if (d.degree(v) == 0) return true;
  if (d.degree(v) != 1) return false;
  Vertex w = d.neighbors(v).begin()->first;
  return d.is_spider(w) && d.degree(w) == 1 && d.kind(w) == d.kind(v);
}

void do_fold(ZxDiagram& d, Vertex v) {
  Scalar& s = d.scalar();
  if (d.degree(v) == 0) {
    s.add_phase_pair(d.phase(v));
    d.remove_vertex(v);
    return;
  }
  Vertex w = d.neighbors(v).begin()->first;
  const Phase a = d.phase(v);
  const Phase b = d.phase(w);
  if (*d.edge_kind(v, w) == EdgeKind::Simple) {
    s.add_phase_pair(a + b);
  } else if (a.is_pauli() || b.is_pauli()) {
    // Sum over x, y of e^{i(a x + b y)} (-1)^{xy} / sqrt2.
    const Phase pauli = a.is_pauli() ? a : b;
    const Phase other = a.is_pauli() ? b : a;
    s.add_power(1);
    if (pauli == Phase::pi()) s.add_phase(other);
    // The phase of `other` no longer matters when the Pauli phase is 0.
    PhaseTable* t = d.phase_table();
    Vertex ov = a.is_pauli() ? w : v;
    const auto& od = d.data(ov);
    if (t && od.var >= 0 && !t->is_clifford(od.var)) {
      t->values[static_cast<std::size_t>(od.var)] = Phase();
      d.set_phase(ov, Phase());
    }
  } else {
    std::complex<double> ea = a.exp_i();
    std::complex<double> eb = b.exp_i();
    s.add_float((1.0 + ea + eb - ea * eb) / std::sqrt(2.0));
  }
  d.remove_vertex(v);
  d.remove_vertex(w);
}

}  // namespace

// ---------------------------------------------------------------- predicates

bool is_boundary_adjacent(const ZxDiagram& d, Vertex v) {
  for (const auto& [w, k] : d.neighbors(v)) {
    if (d.is_boundary(w)) return true;
  }
  return false;
}

bool is_internal(const ZxDiagram& d, Vertex v) {
  return d.contains(v) && d.is_spider(v) && !is_boundary_adjacent(d, v);
}

bool has_only_h_edges(const ZxDiagram& d, Vertex v) {
  for (const auto& [w, k] : d.neighbors(v)) {
    if (k != EdgeKind::Hadamard || d.kind(w) != VertexKind::Z) return false;
  }
  return true;
}

std::optional<GadgetView> gadget_at_hub(const ZxDiagram& d, Vertex hub, bool allow_pi_hub) {
  if (!d.contains(hub) || !hub_shape(d, hub)) return std::nullopt;
  if (!d.phase(hub).is_zero() && !(allow_pi_hub && d.phase(hub) == Phase::pi())) return std::nullopt;
  GadgetView g;
  g.hub = hub;
  g.leaf = *find_leaf(d, hub);
  for (const auto& [w, k] : d.neighbors(hub)) {
    if (w != g.leaf) g.targets.push_back(w);
  }
  return g;
}

bool is_leaf(const ZxDiagram& d, Vertex v) {
  if (!is_z(d, v) || d.degree(v) != 1) return false;
  Vertex h = d.neighbors(v).begin()->first;
  auto g = gadget_at_hub(d, h);
  return g && g->leaf == v;
}

bool is_gadget_part(const ZxDiagram& d, Vertex v) {
  return gadget_at_hub(d, v).has_value() || is_leaf(d, v);
}

std::vector<GadgetView> gadgets(const ZxDiagram& d, bool allow_pi_hub) {
  std::vector<GadgetView> out;
  for (Vertex v : d.vertices()) {
    if (auto g = gadget_at_hub(d, v, allow_pi_hub)) out.push_back(*g);
  }
  return out;
}

std::string graph_like_violation(const ZxDiagram& d) {
  for (Vertex v : d.vertices()) {
    if (d.kind(v) == VertexKind::X) return "X spider " + std::to_string(v);
    int boundaries = 0;
    for (const auto& [w, k] : d.neighbors(v)) {
      if (d.is_boundary(w)) {
        ++boundaries;
        if (d.is_boundary(v)) return "bare wire at " + std::to_string(v);
      } else if (d.is_spider(v) && k != EdgeKind::Hadamard) {
        return "simple edge " + std::to_string(v) + "-" + std::to_string(w);
      }
    }
    if (d.is_spider(v) && boundaries > 1) return "spider " + std::to_string(v) + " on two boundaries";
  }
  return "";
}

bool lc_applies(const ZxDiagram& d, Vertex v) {
  if (!is_z(d, v) || !is_internal(d, v)) return false;
  const Phase& p = d.phase(v);
  if (!p.is_proper_clifford()) return false;
  if (!has_only_h_edges(d, v)) return false;
  return !is_leaf(d, v);
}

bool pivot_applies(const ZxDiagram& d, Vertex u, Vertex v) {
  if (u == v || !is_z(d, u) || !is_z(d, v)) return false;
  if (d.edge_kind(u, v) != EdgeKind::Hadamard) return false;
  if (!is_internal(d, u) || !is_internal(d, v)) return false;
  if (!d.phase(u).is_pauli() || !d.phase(v).is_pauli()) return false;
  return has_only_h_edges(d, u) && has_only_h_edges(d, v);
}

namespace {

bool internal_pauli_candidate(const ZxDiagram& d, Vertex u) {
  return is_z(d, u) && is_internal(d, u) && d.phase(u).is_pauli() && d.degree(u) > 0 &&
         has_only_h_edges(d, u) && !is_gadget_part(d, u);
}

// Degree-1 ends are left alone: pivoting them only rebuilds the same pair with new ids.
std::optional<Vertex> gadgetize_internal_partner(const ZxDiagram& d, Vertex u) {
  if (!internal_pauli_candidate(d, u) || d.degree(u) < 2) return std::nullopt;
  for (const auto& [w, k] : d.neighbors(u)) {
    if (is_internal(d, w) && d.degree(w) >= 2 && !d.phase(w).is_clifford() && has_only_h_edges(d, w) &&
        !is_gadget_part(d, w)) {
      return w;
    }
  }
  return std::nullopt;
}

std::optional<Vertex> gadgetize_boundary_partner(const ZxDiagram& d, Vertex u) {
  if (!internal_pauli_candidate(d, u)) return std::nullopt;
  std::optional<Vertex> best;
  for (const auto& [w, k] : d.neighbors(u)) {
    if (!is_boundary_adjacent(d, w)) return std::nullopt;
    int boundaries = 0;
    for (const auto& [x, kx] : d.neighbors(w)) {
      if (d.is_boundary(x)) {
        ++boundaries;
      } else if (kx != EdgeKind::Hadamard || d.kind(x) != VertexKind::Z) {
        return std::nullopt;
      }
    }
    if (boundaries != 1) return std::nullopt;
    if (!best || (d.phase(w).is_clifford() && !d.phase(*best).is_clifford())) best = w;
  }
  return best;
}

bool gadget_copy_applies(const ZxDiagram& d, Vertex h) {
  auto g = gadget_at_hub(d, h);
  return g && d.phase(g->leaf).is_clifford();
}

}  // namespace

// ---------------------------------------------------------------- primitives

void apply_color_change(ZxDiagram& d, Vertex v) {
  require(d.contains(v) && d.kind(v) == VertexKind::X, "color change needs an X spider");
  d.record("color", {v});
  d.set_kind(v, VertexKind::Z);
  auto nbrs = d.neighbors(v);
  for (const auto& [w, k] : nbrs) d.set_edge_kind(v, w, toggle(k));
}

void apply_fuse(ZxDiagram& d, Vertex u, Vertex v) {
  require(d.contains(u) && d.contains(v) && d.is_spider(u) && d.kind(u) == d.kind(v) &&
              d.edge_kind(u, v) == EdgeKind::Simple,
          "fusion needs same-colour spiders joined by a simple edge");
  d.record("fuse", {u, v});
  do_fuse(d, u, v);
}

void apply_remove_identity(ZxDiagram& d, Vertex v) {
  require(is_z(d, v) && d.phase(v).is_zero() && d.degree(v) == 2,
          "identity removal needs a phase-free degree-2 Z spider");
  d.record("id", {v});
  auto it = d.neighbors(v).begin();
  auto [a, ka] = *it++;
  auto [b, kb] = *it;
  d.remove_vertex(v);
  d.add_edge_resolving(a, b, compose_kind(ka, kb));
}

Vertex apply_unfuse_boundary(ZxDiagram& d, Vertex v, Vertex b) {
  require(d.contains(v) && d.is_spider(v) && d.contains(b) && d.is_boundary(b) && d.connected(v, b),
          "unfuse_boundary needs a spider and its boundary");
  d.record("unfuse_boundary", {v, b});
  return do_unfuse_boundary(d, v, b);
}

void apply_split_wire(ZxDiagram& d, Vertex b1, Vertex b2) {
  require(d.contains(b1) && d.contains(b2) && d.is_boundary(b1) && d.is_boundary(b2) &&
              d.connected(b1, b2),
          "split_wire needs a boundary-boundary wire");
  d.record("split_wire", {b1, b2});
  EdgeKind k = *d.edge_kind(b1, b2);
  const auto& p = d.data(b1);
  const auto& q = d.data(b2);
  Vertex s1 = d.add_vertex(VertexKind::Z, {}, p.row, (2 * p.col + q.col) / 3);
  Vertex s2 = d.add_vertex(VertexKind::Z, {}, q.row, (p.col + 2 * q.col) / 3);
  d.remove_edge(b1, b2);
  d.add_edge(b1, s1, EdgeKind::Simple);
  d.add_edge(s1, s2, EdgeKind::Hadamard);
  d.add_edge(s2, b2, toggle(k));
}

void apply_lc(ZxDiagram& d, Vertex v) {
  require(lc_applies(d, v), "local complementation does not apply");
  d.record("lc", {v});
  do_lc(d, v);
}

void apply_pivot(ZxDiagram& d, Vertex u, Vertex v) {
  require(pivot_applies(d, u, v), "pivot does not apply");
  d.record("pivot", {u, v});
  do_pivot(d, u, v);
}

void apply_normalize_hub(ZxDiagram& d, Vertex hub) {
  require(d.contains(hub) && d.phase(hub) == Phase::pi() && hub_shape(d, hub),
          "hub normalization needs a gadget hub with phase pi");
  d.record("hub_pi", {hub});
  do_normalize_hub(d, hub);
}

Vertex apply_unfuse_gadget(ZxDiagram& d, Vertex w) {
  require(is_z(d, w), "unfuse_gadget needs a Z spider");
  d.record("unfuse_gadget", {w});
  return do_unfuse_gadget(d, w);
}

void apply_gadgetize_internal(ZxDiagram& d, Vertex u, Vertex w) {
  require(gadgetize_internal_partner(d, u).has_value() && d.connected(u, w) && is_internal(d, w) &&
              d.degree(w) >= 2 && !d.phase(w).is_clifford() && has_only_h_edges(d, w) &&
              !is_gadget_part(d, w),
          "gadgetization (g) does not apply");
  d.record("gadget_g", {u, w});
  do_unfuse_gadget(d, w);
  do_pivot(d, u, w);
}

void apply_gadgetize_boundary(ZxDiagram& d, Vertex u, Vertex w) {
  require(internal_pauli_candidate(d, u) && d.connected(u, w) && is_boundary_adjacent(d, w),
          "gadgetization (b) does not apply");
  d.record("gadget_b", {u, w});
  do_unfuse_boundary(d, w, *boundary_neighbor(d, w));
  if (!d.phase(w).is_pauli()) do_unfuse_gadget(d, w);
  do_pivot(d, u, w);
}

void apply_gadget_merge(ZxDiagram& d, Vertex h1, Vertex h2) {
  auto g1 = gadget_at_hub(d, h1);
  auto g2 = gadget_at_hub(d, h2);
  require(h1 != h2 && g1 && g2 && g1->targets == g2->targets, "gadget merge needs equal targets");
  d.record("a1", {h1, h2});
  const int k = static_cast<int>(g1->targets.size());
  d.merge_phase(g1->leaf, g2->leaf);
  d.remove_vertex(g2->leaf);
  d.remove_vertex(h2);
  d.scalar().add_power(1 - k);
}

void apply_gadget_single(ZxDiagram& d, Vertex hub) {
  auto g = gadget_at_hub(d, hub);
  require(g && g->targets.size() == 1, "single-target gadget expected");
  d.record("a2", {hub});
  d.merge_phase(g->targets[0], g->leaf);
  d.remove_vertex(g->leaf);
  d.remove_vertex(hub);
}

void apply_gadget_copy(ZxDiagram& d, Vertex hub) {
  require(gadget_copy_applies(d, hub), "copy needs a gadget with a Clifford leaf");
  auto g = gadget_at_hub(d, hub);
  d.record("copy", {hub});
  const Phase theta = d.phase(g->leaf);
  const auto& t = g->targets;
  const int k = static_cast<int>(t.size());
  d.remove_vertex(g->leaf);
  d.remove_vertex(hub);
  d.scalar().add_power(1 - k);
  if (theta.is_zero()) return;
  for (Vertex a : t) d.add_to_phase(a, theta);
  if (theta.is_pauli()) return;
  d.scalar().add_power(k * (k - 1) / 2);
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      d.add_edge_resolving(t[i], t[j], EdgeKind::Hadamard);
    }
  }
}

void apply_fold_component(ZxDiagram& d, Vertex v) {
  require(is_foldable(d, v), "fold needs an isolated spider or isolated pair");
  d.record("fold", {v});
  do_fold(d, v);
}

// ---------------------------------------------------------------- matchers

std::vector<Vertex> match_fuse(const ZxDiagram& d) {
  std::vector<Vertex> out;
  std::set<Vertex> taken;
  for (Vertex u : d.vertices()) {
    if (!d.is_spider(u) || taken.count(u)) continue;
    for (const auto& [w, k] : d.neighbors(u)) {
      if (k == EdgeKind::Simple && d.kind(w) == d.kind(u) && !taken.count(w)) {
        out.push_back(u);
        out.push_back(w);
        taken.insert(u);
        taken.insert(w);
        break;
      }
    }
  }
  return out;
}

namespace {

bool identity_removable(const ZxDiagram& d, Vertex v) {
  if (!is_z(d, v) || !d.phase(v).is_zero() || d.degree(v) != 2) return false;
  auto it = d.neighbors(v).begin();
  Vertex a = it->first;
  Vertex b = std::next(it)->first;
  if (d.is_boundary(a) && d.is_boundary(b)) return false;
  if (d.is_boundary(a) && is_boundary_adjacent(d, b)) return false;
  if (d.is_boundary(b) && is_boundary_adjacent(d, a)) return false;
  return true;
}

}  // namespace

std::vector<Vertex> match_identity(const ZxDiagram& d) {
  std::vector<Vertex> out;
  std::set<Vertex> taken;
  for (Vertex v : d.vertices()) {
    if (taken.count(v) || !identity_removable(d, v)) continue;
    bool clash = false;
    for (const auto& [w, k] : d.neighbors(v)) clash = clash || taken.count(w);
    if (clash) continue;
    out.push_back(v);
    taken.insert(v);
    for (const auto& [w, k] : d.neighbors(v)) taken.insert(w);
  }
  return out;
}

std::vector<Vertex> match_lc(const ZxDiagram& d) {
  std::vector<Vertex> out;
  std::set<Vertex> taken;
  for (Vertex v : d.vertices()) {
    if (taken.count(v) || !lc_applies(d, v)) continue;
    out.push_back(v);
    taken.insert(v);
    for (const auto& [w, k] : d.neighbors(v)) taken.insert(w);
  }
  return out;
}

namespace {

template <typename Pred>
std::vector<PivotMatch> match_pairs(const ZxDiagram& d, Pred partner) {
  std::vector<PivotMatch> out;
  std::set<Vertex> taken;
  for (Vertex u : d.vertices()) {
    if (taken.count(u)) continue;
    auto w = partner(u);
    if (!w || taken.count(*w)) continue;
    out.push_back({u, *w});
    for (Vertex x : {u, *w}) {
      taken.insert(x);
      for (const auto& [y, k] : d.neighbors(x)) taken.insert(y);
    }
  }
  return out;
}

}  // namespace

std::vector<PivotMatch> match_pivot(const ZxDiagram& d) {
  return match_pairs(d, [&](Vertex u) -> std::optional<Vertex> {
    if (!is_z(d, u)) return std::nullopt;
    for (const auto& [w, k] : d.neighbors(u)) {
      if (pivot_applies(d, u, w)) return w;
    }
    return std::nullopt;
  });
}

std::vector<PivotMatch> match_gadgetize_internal(const ZxDiagram& d) {
  return match_pairs(d, [&](Vertex u) { return gadgetize_internal_partner(d, u); });
}

std::vector<PivotMatch> match_gadgetize_boundary(const ZxDiagram& d) {
  return match_pairs(d, [&](Vertex u) { return gadgetize_boundary_partner(d, u); });
}

std::vector<std::vector<Vertex>> match_gadget_merge(const ZxDiagram& d) {
  std::map<std::vector<Vertex>, std::vector<Vertex>> groups;
  for (const auto& g : gadgets(d)) groups[g.targets].push_back(g.hub);
  std::vector<std::vector<Vertex>> out;
  for (auto& [targets, hubs] : groups) {
    if (hubs.size() >= 2) out.push_back(hubs);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> match_gadget_single(const ZxDiagram& d) {
  std::vector<Vertex> out;
  for (const auto& g : gadgets(d)) {
    if (g.targets.size() == 1) out.push_back(g.hub);
  }
  return out;
}

std::vector<Vertex> match_gadget_copy(const ZxDiagram& d) {
  std::vector<Vertex> out;
  for (const auto& g : gadgets(d)) {
    if (d.phase(g.leaf).is_clifford()) out.push_back(g.hub);
  }
  return out;
}

// ---------------------------------------------------------------- drivers

namespace {

std::size_t fuse_all(ZxDiagram& d) {
  std::size_t n = 0;
  for (Vertex u : d.vertices()) {
    if (!d.contains(u) || !d.is_spider(u)) continue;
    bool again = true;
    while (again) {
      again = false;
      for (const auto& [w, k] : d.neighbors(u)) {
        if (k == EdgeKind::Simple && d.is_spider(w) && d.kind(w) == d.kind(u)) {
          apply_fuse(d, u, w);
          ++n;
          again = true;
          break;
        }
      }
    }
  }
  return n;
}

std::size_t separate_boundaries(ZxDiagram& d) {
  std::size_t n = 0;
  for (Vertex v : d.vertices()) {
    if (!d.contains(v) || !d.is_spider(v)) continue;
    std::vector<Vertex> bs;
    for (const auto& [w, k] : d.neighbors(v)) {
      if (d.is_boundary(w)) bs.push_back(w);
    }
    for (std::size_t i = 1; i < bs.size(); ++i) {
      apply_unfuse_boundary(d, v, bs[i]);
      ++n;
    }
  }
  return n;
}

std::size_t normalize_hubs(ZxDiagram& d) {
  std::size_t n = 0;
  for (Vertex v : d.vertices()) {
    if (d.contains(v) && d.phase(v) == Phase::pi() && hub_shape(d, v)) {
      apply_normalize_hub(d, v);
      ++n;
    }
  }
  return n;
}

}  // namespace

void to_graph_like(ZxDiagram& d) {
  for (Vertex v : d.vertices()) {
    if (d.kind(v) == VertexKind::X) apply_color_change(d, v);
  }
  fuse_all(d);
  for (Vertex b : d.vertices()) {
    if (!d.contains(b) || !d.is_boundary(b) || d.degree(b) != 1) continue;
    Vertex w = d.neighbors(b).begin()->first;
    if (d.is_boundary(w)) apply_split_wire(d, b, w);
  }
  separate_boundaries(d);
}

std::size_t fold_scalar_components(ZxDiagram& d, bool exact_only) {
  std::size_t n = 0;
  for (Vertex v : d.vertices()) {
    if (!is_foldable(d, v)) continue;
    if (exact_only && !fold_is_exact(d, v)) continue;
    apply_fold_component(d, v);
    ++n;
  }
  return n;
}

std::size_t basic_cleanup(ZxDiagram& d) {
  std::size_t total = 0;
  while (true) {
    std::size_t n = 0;
    for (Vertex v : d.vertices()) {
      if (d.kind(v) == VertexKind::X) {
        apply_color_change(d, v);
        ++n;
      }
    }
    n += fuse_all(d);
    n += separate_boundaries(d);
    for (Vertex v : match_identity(d)) {
      if (identity_removable(d, v)) {
        apply_remove_identity(d, v);
        ++n;
      }
    }
    n += normalize_hubs(d);
    n += fold_scalar_components(d, true);
    total += n;
    if (n == 0) return total;
  }
}

std::size_t lc_simp(ZxDiagram& d) {
  std::size_t n = 0;
  while (true) {
    auto ms = match_lc(d);
    std::size_t before = n;
    for (Vertex v : ms) {
      if (lc_applies(d, v)) {
        apply_lc(d, v);
        ++n;
      }
    }
    if (n == before) return n;
  }
}

std::size_t pivot_simp(ZxDiagram& d) {
  std::size_t n = 0;
  while (true) {
    auto ms = match_pivot(d);
    std::size_t before = n;
    for (const auto& m : ms) {
      if (pivot_applies(d, m.u, m.v)) {
        apply_pivot(d, m.u, m.v);
        ++n;
      }
    }
    if (n == before) return n;
  }
}

std::size_t gadgetize_boundary(ZxDiagram& d, bool clifford_only) {
  std::size_t n = 0;
  while (true) {
    auto ms = match_gadgetize_boundary(d);
    std::size_t before = n;
    for (const auto& m : ms) {
      auto w = gadgetize_boundary_partner(d, m.u);
      if (w && *w == m.v && (!clifford_only || d.phase(m.v).is_clifford())) {
        apply_gadgetize_boundary(d, m.u, m.v);
        ++n;
      }
    }
    if (n == before) return n;
  }
}

std::size_t gadgetize_internal(ZxDiagram& d) {
  std::size_t n = 0;
  while (true) {
    auto ms = match_gadgetize_internal(d);
    std::size_t before = n;
    for (const auto& m : ms) {
      auto w = gadgetize_internal_partner(d, m.u);
      if (w && *w == m.v) {
        apply_gadgetize_internal(d, m.u, m.v);
        ++n;
      }
    }
    normalize_hubs(d);
    if (n == before) return n;
  }
}

std::size_t gadgetize(ZxDiagram& d) {
  std::size_t n = gadgetize_boundary(d);
  normalize_hubs(d);
  return n + gadgetize_internal(d);
}

std::size_t gadget_merge_simp(ZxDiagram& d) {
  std::size_t n = 0;
  while (true) {
    normalize_hubs(d);
    auto groups = match_gadget_merge(d);
    std::size_t before = n;
    for (const auto& hubs : groups) {
      for (std::size_t i = 1; i < hubs.size(); ++i) {
        auto g1 = gadget_at_hub(d, hubs[0]);
        auto g2 = gadget_at_hub(d, hubs[i]);
        if (g1 && g2 && g1->targets == g2->targets) {
          apply_gadget_merge(d, hubs[0], hubs[i]);
          ++n;
        }
      }
    }
    if (n == before) return n;
  }
}

std::size_t gadget_single_simp(ZxDiagram& d) {
  std::size_t n = 0;
  while (true) {
    normalize_hubs(d);
    auto ms = match_gadget_single(d);
    std::size_t before = n;
    for (Vertex h : ms) {
      auto g = gadget_at_hub(d, h);
      if (g && g->targets.size() == 1) {
        apply_gadget_single(d, h);
        ++n;
      }
    }
    if (n == before) return n;
  }
}

std::size_t gadget_fuse(ZxDiagram& d) { return gadget_merge_simp(d) + gadget_single_simp(d); }

std::size_t copy_simp(ZxDiagram& d) {
  std::size_t n = 0;
  while (true) {
    normalize_hubs(d);
    auto ms = match_gadget_copy(d);
    std::size_t before = n;
    for (Vertex h : ms) {
      if (gadget_copy_applies(d, h)) {
        apply_gadget_copy(d, h);
        ++n;
      }
    }
    if (n == before) return n;
  }
}

// ---------------------------------------------------------------- trace

void replay_trace(ZxDiagram& d, const RewriteTrace& trace) {
  for (const auto& e : trace) {
    const auto& p = e.payload;
    auto need = [&](std::size_t n) {
      if (p.size() != n) throw Error(ErrorKind::Contract, "bad payload for rule " + e.rule);
    };
    if (e.rule == "color") {
      need(1);
      apply_color_change(d, p[0]);
    } else if (e.rule == "fuse") {
      need(2);
      apply_fuse(d, p[0], p[1]);
    } else if (e.rule == "id") {
      need(1);
      apply_remove_identity(d, p[0]);
    } else if (e.rule == "unfuse_boundary") {
      need(2);
      apply_unfuse_boundary(d, p[0], p[1]);
    } else if (e.rule == "split_wire") {
      need(2);
      apply_split_wire(d, p[0], p[1]);
    } else if (e.rule == "lc") {
      need(1);
      apply_lc(d, p[0]);
    } else if (e.rule == "pivot") {
      need(2);
      apply_pivot(d, p[0], p[1]);
    } else if (e.rule == "hub_pi") {
      need(1);
      apply_normalize_hub(d, p[0]);
    } else if (e.rule == "unfuse_gadget") {
      need(1);
      apply_unfuse_gadget(d, p[0]);
    } else if (e.rule == "gadget_g") {
      need(2);
      apply_gadgetize_internal(d, p[0], p[1]);
    } else if (e.rule == "gadget_b") {
      need(2);
      apply_gadgetize_boundary(d, p[0], p[1]);
    } else if (e.rule == "a1") {
      need(2);
      apply_gadget_merge(d, p[0], p[1]);
    } else if (e.rule == "a2") {
      need(1);
      apply_gadget_single(d, p[0]);
    } else if (e.rule == "copy") {
      need(1);
      apply_gadget_copy(d, p[0]);
    } else if (e.rule == "fold") {
      need(1);
      apply_fold_component(d, p[0]);
    } else {
      throw Error(ErrorKind::Contract, "unknown rule '" + e.rule + "' in trace");
    }
  }
}

std::string trace_to_json(const RewriteTrace& trace) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& e : trace) j.push_back({{"rule", e.rule}, {"vertices", e.payload}});
  return j.dump();
}

}  // namespace zxopt
