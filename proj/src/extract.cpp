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

#include "zxopt/extract.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "zxopt/error.hpp"
#include "zxopt/rules.hpp"
#include "zxopt/simplify.hpp"

namespace zxopt {

namespace {

ZxDiagram working_copy(const ZxDiagram& in) {
  ZxDiagram d = in;
  d.attach_trace(nullptr);
  d.attach_phase_table(nullptr);
  if (d.inputs().size() != d.outputs().size()) {
    throw Error(ErrorKind::Form, "extraction needs as many inputs as outputs");
  }
  to_graph_like(d);
  return d;
}

Vertex sole_neighbor(const ZxDiagram& d, Vertex b) {
  if (d.degree(b) != 1) throw Error(ErrorKind::Form, "boundary " + std::to_string(b) + " is not a wire end");
  return d.neighbors(b).begin()->first;
}

bool is_input(const ZxDiagram& d, Vertex v) {
  return std::find(d.inputs().begin(), d.inputs().end(), v) != d.inputs().end();
}

void toggle_h_edge(ZxDiagram& d, Vertex a, Vertex b) {
  if (d.connected(a, b)) {
    d.remove_edge(a, b);
  } else {
    d.add_edge(a, b, EdgeKind::Hadamard);
  }
}

/** Rows t plus every row of some set of at most max_extra others that sum to a single 1. */
std::optional<std::vector<RowOp>> lookahead(const Mat2& m, int max_extra) {
  std::size_t rows = m.rows();
  for (int k = 1; k <= max_extra; ++k) {
    if (static_cast<std::size_t>(k) >= rows) break;
    for (std::size_t t = 0; t < rows; ++t) {
      std::vector<std::size_t> others;
      for (std::size_t r = 0; r < rows; ++r) {
        if (r != t) others.push_back(r);
      }
      std::vector<bool> pick(others.size(), false);
      std::fill(pick.begin(), pick.begin() + k, true);
      do {
        std::vector<RowOp> ops;
        Mat2 probe = m;
        for (std::size_t i = 0; i < others.size(); ++i) {
          if (pick[i]) {
            probe.row_add(others[i], t);
            ops.push_back({others[i], t});
          }
        }
        if (probe.single_one(t)) return ops;
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }
  return std::nullopt;
}

/**
 * Cancels H pairs and merges Z phases that meet on a wire with nothing in
 * between. Bare wires come out of graph-like form as two Hadamards.
 */
Circuit cancel_adjacent(const Circuit& c) {
  std::vector<std::optional<Gate>> out;
  std::vector<std::vector<std::size_t>> last(c.qubits);
  for (const Gate& g : c.gates) {
    if (g.arity() == 1) {
      auto& stack = last[g.q[0]];
      if (!stack.empty() && out[stack.back()]->arity() == 1) {
        Gate& prev = *out[stack.back()];
        if (g.kind == GateKind::H && prev.kind == GateKind::H) {
          out[stack.back()].reset();
          stack.pop_back();
          continue;
        }
        if (g.kind == GateKind::ZPhase && prev.kind == GateKind::ZPhase) {
          prev.phase += g.phase;
          if (prev.phase.is_zero()) {
            out[stack.back()].reset();
            stack.pop_back();
          }
          continue;
        }
      }
      if (g.is_phase() && g.phase.is_zero()) continue;
    }
    for (std::size_t i = 0; i < g.arity(); ++i) last[g.q[i]].push_back(out.size());
    out.push_back(g);
  }
  Circuit r;
  r.name = c.name;
  r.qubits = c.qubits;
  for (const auto& g : out) {
    if (g) r.gates.push_back(*g);
  }
  return r;
}

}  // namespace

Circuit extract_circuit(const ZxDiagram& in, const ExtractOptions& opts) {
  if (opts.lookahead_rows < 0 || opts.lookahead_rows > kMaxLookaheadRows) {
    throw Error(ErrorKind::InvalidArgument, "lookahead_rows must be in 0..3");
  }
  ZxDiagram d = working_copy(in);
  const std::size_t n = d.outputs().size();
  std::vector<Gate> rev;  // gates in output-to-input order

  while (true) {
    std::vector<std::optional<Vertex>> front(n);
    for (std::size_t q = 0; q < n; ++q) {
      Vertex o = d.outputs()[q];
      Vertex v = sole_neighbor(d, o);
      if (*d.edge_kind(o, v) == EdgeKind::Hadamard) {
        rev.push_back(Gate::h(q));
        d.set_edge_kind(o, v, EdgeKind::Simple);
      }
      if (!d.is_boundary(v)) front[q] = v;
    }
    for (std::size_t q = 0; q < n; ++q) {
      if (front[q] && !d.phase(*front[q]).is_zero()) {
        rev.push_back(Gate::zphase(q, d.phase(*front[q])));
        d.set_phase(*front[q], Phase());
      }
    }
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t p = q + 1; p < n; ++p) {
        if (front[q] && front[p] && d.connected(*front[q], *front[p])) {
          rev.push_back(Gate::cz(q, p));
          d.remove_edge(*front[q], *front[p]);
        }
      }
    }

    bool rewired = false;
    for (std::size_t q = 0; q < n; ++q) {
      if (!front[q]) continue;
      Vertex v = *front[q];
      std::optional<Vertex> b;
      for (const auto& [w, k] : d.neighbors(v)) {
        if (d.is_boundary(w) && is_input(d, w)) b = w;
      }
      if (!b) continue;
      if (d.degree(v) == 2) {
        EdgeKind k = *d.edge_kind(v, *b);
        d.remove_vertex(v);
        d.add_edge(d.outputs()[q], *b, k);
      } else {
        apply_unfuse_boundary(d, v, *b);
      }
      rewired = true;
    }
    if (rewired) continue;
    if (std::none_of(front.begin(), front.end(), [](const auto& f) { return f.has_value(); })) break;

    // Gadgets next to the frontier turn into ordinary vertices by a pivot.
    std::optional<std::pair<std::size_t, Vertex>> gadget_move;
    for (Vertex h : d.vertices()) {
      if (!gadget_at_hub(d, h, true)) continue;
      for (std::size_t q = 0; q < n && !gadget_move; ++q) {
        if (front[q] && d.connected(*front[q], h)) gadget_move = {q, h};
      }
      if (gadget_move) break;
    }
    if (gadget_move) {
      auto [q, h] = *gadget_move;
      if (!d.phase(h).is_zero()) apply_normalize_hub(d, h);
      apply_unfuse_boundary(d, *front[q], d.outputs()[q]);
      apply_pivot(d, *front[q], h);
      continue;
    }

    std::vector<std::size_t> rows;
    for (std::size_t q = 0; q < n; ++q) {
      if (front[q]) rows.push_back(q);
    }
    std::set<Vertex> colset;
    for (std::size_t q : rows) {
      for (const auto& [w, k] : d.neighbors(*front[q])) {
        if (w != d.outputs()[q]) colset.insert(w);
      }
    }
    std::vector<Vertex> cols(colset.begin(), colset.end());
    Mat2 m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) m.set(i, j, d.connected(*front[rows[i]], cols[j]));
    }

    bool ready = false;
    for (std::size_t i = 0; i < m.rows(); ++i) ready = ready || m.single_one(i).has_value();
    std::vector<RowOp> ops;
    if (!ready) {
      if (auto found = lookahead(m, opts.lookahead_rows)) {
        ops = *found;
      } else {
        GaussOptions g{opts.early_stop ? GaussMode::EarlyStop : GaussMode::FullRref, opts.column_heuristic};
        ops = gauss_reduce(m, g).ops;
      }
    }
    for (const RowOp& op : ops) {
      Vertex src = *front[rows[op.source]];
      Vertex dst = *front[rows[op.target]];
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (m.at(op.source, j)) toggle_h_edge(d, dst, cols[j]);
      }
      m.row_add(op.source, op.target);
      (void)src;
      rev.push_back(Gate::cnot(rows[op.target], rows[op.source]));
    }

    std::set<std::size_t> taken;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      auto c = m.single_one(i);
      if (!c || taken.count(*c)) continue;
      taken.insert(*c);
      std::size_t q = rows[i];
      d.remove_vertex(*front[q]);
      d.add_edge(d.outputs()[q], cols[*c], EdgeKind::Hadamard);
    }
    if (taken.empty()) {
      throw Error(ErrorKind::NoGflow, "no extractable vertex after elimination; the diagram has no gflow");
    }
  }

  // Output q is now wired straight to some input; realise that permutation with SWAPs.
  std::vector<std::size_t> perm(n);
  for (std::size_t q = 0; q < n; ++q) {
    Vertex b = sole_neighbor(d, d.outputs()[q]);
    auto it = std::find(d.inputs().begin(), d.inputs().end(), b);
    if (it == d.inputs().end()) throw Error(ErrorKind::Form, "output wired to another output");
    perm[q] = static_cast<std::size_t>(it - d.inputs().begin());
  }
  Circuit c;
  c.qubits = n;
  std::vector<std::size_t> state(n);
  for (std::size_t i = 0; i < n; ++i) state[i] = i;
  for (std::size_t q = 0; q < n; ++q) {
    if (state[q] == perm[q]) continue;
    std::size_t j = static_cast<std::size_t>(std::find(state.begin(), state.end(), perm[q]) - state.begin());
    c.add(Gate::swap(q, j));
    std::swap(state[q], state[j]);
  }
  for (auto it = rev.rbegin(); it != rev.rend(); ++it) c.add(*it);
  return cancel_adjacent(c);
}

namespace {

using Layers = std::array<std::vector<Gate>, 6>;

bool touches(const std::vector<Gate>& layer, std::size_t q) {
  for (const Gate& g : layer) {
    for (std::size_t i = 0; i < g.arity(); ++i) {
      if (g.q[i] == q) return true;
    }
  }
  return false;
}

/** Cancels H pairs and merges Z phases in a single-qubit gate run. */
std::vector<Gate> tidy_run(const std::vector<Gate>& run) {
  std::vector<Gate> out;
  for (const Gate& g : run) {
    if (!out.empty() && g.kind == GateKind::H && out.back().kind == GateKind::H) {
      out.pop_back();
    } else if (!out.empty() && g.kind == GateKind::ZPhase && out.back().kind == GateKind::ZPhase) {
      out.back().phase += g.phase;
      if (out.back().phase.is_zero()) out.pop_back();
    } else if (!(g.kind == GateKind::ZPhase && g.phase.is_zero())) {
      out.push_back(g);
    }
  }
  return out;
}

std::vector<Gate> on_qubit(const std::vector<Gate>& layer, std::size_t q) {
  std::vector<Gate> out;
  for (const Gate& g : layer) {
    if (g.q[0] == q) out.push_back(g);
  }
  return out;
}

/** Slides the middle H layer and the last local layer outward where no two-qubit gate blocks them. */
void tidy_layers(Layers& L, std::size_t n) {
  Layers out;
  for (std::size_t k : {1, 2, 4}) out[k] = L[k];
  for (std::size_t q = 0; q < n; ++q) {
    std::vector<Gate> first = on_qubit(L[0], q);
    std::vector<Gate> mid = on_qubit(L[3], q);
    std::vector<Gate> last = on_qubit(L[5], q);
    if (!touches(L[1], q) && !touches(L[2], q)) {
      first.insert(first.end(), mid.begin(), mid.end());
      mid.clear();
      if (!touches(L[4], q)) {
        first.insert(first.end(), last.begin(), last.end());
        last.clear();
      }
    } else if (!touches(L[4], q)) {
      mid.insert(mid.end(), last.begin(), last.end());
      last = mid;
      mid.clear();
    }
    first = tidy_run(first);
    last = tidy_run(last);
    out[0].insert(out[0].end(), first.begin(), first.end());
    out[3].insert(out[3].end(), mid.begin(), mid.end());
    out[5].insert(out[5].end(), last.begin(), last.end());
  }
  L = out;
}

}  // namespace

LayeredClifford extract_clifford_normal_form(const ZxDiagram& in) {
  // Extracting the adjoint puts the CNOT block next to the outputs' CZs;
  // taking the adjoint again yields LC, CZ, CNOT, H, CZ, LC.
  ZxDiagram e = adjoint_diagram(in);
  e.attach_trace(nullptr);
  e.attach_phase_table(nullptr);
  if (e.inputs().size() != e.outputs().size()) {
    throw Error(ErrorKind::Form, "normal form needs as many inputs as outputs");
  }
  clifford_simp(e);
  for (Vertex v : e.vertices()) {
    if (!e.is_spider(v)) continue;
    if (is_internal(e, v) && e.degree(v) > 0) {
      throw Error(ErrorKind::NotClifford, "internal spiders remain after Clifford simplification");
    }
    if (!e.phase(v).is_clifford()) throw Error(ErrorKind::NotClifford, "non-Clifford phase present");
  }
  const std::size_t n = e.outputs().size();
  // Pushed in output-to-input order: LC_out, CZ_out, CNOT, H, CZ_in, LC_in.
  std::array<std::vector<Gate>, 6> pushed;
  std::vector<Vertex> f(n), g(n);
  for (std::size_t q = 0; q < n; ++q) {
    Vertex o = e.outputs()[q];
    f[q] = sole_neighbor(e, o);
    if (e.is_boundary(f[q])) throw Error(ErrorKind::Form, "bare wire survived graph-like conversion");
    if (*e.edge_kind(o, f[q]) == EdgeKind::Hadamard) pushed[0].push_back(Gate::h(q));
    if (!e.phase(f[q]).is_zero()) pushed[0].push_back(Gate::zphase(q, e.phase(f[q])));
  }
  for (std::size_t p = 0; p < n; ++p) {
    g[p] = sole_neighbor(e, e.inputs()[p]);
    if (std::find(f.begin(), f.end(), g[p]) != f.end()) {
      throw Error(ErrorKind::Form, "spider touches both an input and an output");
    }
  }
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t p = q + 1; p < n; ++p) {
      if (e.connected(f[q], f[p])) pushed[1].push_back(Gate::cz(q, p));
      if (e.connected(g[q], g[p])) pushed[4].push_back(Gate::cz(q, p));
    }
  }
  Mat2 m(n, n);
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t p = 0; p < n; ++p) m.set(q, p, e.connected(f[q], g[p]));
  }
  GaussResult red = gauss_reduce(m);
  if (!(red.matrix == Mat2::identity(n))) {
    throw Error(ErrorKind::Form, "frontier map is singular; diagram is not unitary");
  }
  for (const RowOp& op : red.ops) pushed[2].push_back(Gate::cnot(op.target, op.source));
  for (std::size_t q = 0; q < n; ++q) pushed[3].push_back(Gate::h(q));
  for (std::size_t p = 0; p < n; ++p) {
    if (!e.phase(g[p]).is_zero()) pushed[5].push_back(Gate::zphase(p, e.phase(g[p])));
    if (*e.edge_kind(e.inputs()[p], g[p]) == EdgeKind::Hadamard) pushed[5].push_back(Gate::h(p));
  }

  // Circuit of e runs pushed[5] reversed first; the adjoint reverses again and daggers.
  Layers layers;
  for (std::size_t k = 0; k < 6; ++k) {
    Circuit part;
    part.qubits = n;
    part.gates = pushed[k];
    layers[k] = adjoint_circuit(part).gates;
    std::reverse(layers[k].begin(), layers[k].end());
  }
  tidy_layers(layers, n);
  LayeredClifford out;
  out.circuit.qubits = n;
  for (std::size_t k = 0; k < 6; ++k) {
    out.layer_sizes[k] = layers[k].size();
    for (const Gate& gate : layers[k]) out.circuit.add(gate);
  }
  return out;
}

bool has_clifford_layer_shape(const Circuit& c) {
  auto fits = [](std::size_t layer, const Gate& g) {
    switch (layer) {
      case 0:
      case 5: return g.arity() == 1 && g.phase.is_clifford();
      case 1:
      case 4: return g.kind == GateKind::CZ;
      case 2: return g.kind == GateKind::CNOT;
      case 3: return g.kind == GateKind::H;
    }
    return false;
  };
  std::size_t layer = 0;
  for (const Gate& g : c.gates) {
    while (layer < 6 && !fits(layer, g)) ++layer;
    if (layer == 6) return false;
  }
  return true;
}

}  // namespace zxopt
