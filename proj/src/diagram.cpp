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

#include "zxopt/diagram.hpp"

#include <json.hpp>
#include <sstream>

#include "zxopt/error.hpp"

namespace zxopt {

namespace {

const char* kind_name(VertexKind k) {
  switch (k) {
    case VertexKind::Boundary:
      return "B";
    case VertexKind::Z:
      return "Z";
    case VertexKind::X:
      return "X";
  }
  return "?";
}

VertexKind kind_from_name(const std::string& s) {
  if (s == "B") return VertexKind::Boundary;
  if (s == "Z") return VertexKind::Z;
  if (s == "X") return VertexKind::X;
  throw Error(ErrorKind::Parse, "unknown vertex kind '" + s + "'");
}

}  // namespace

Vertex ZxDiagram::add_vertex(VertexKind kind, Phase phase, double row, double col) {
  return add_vertex_at(verts_.size(), kind, phase, row, col);
}

Vertex ZxDiagram::add_vertex_at(Vertex id, VertexKind kind, Phase phase, double row,
                                double col) {
  if (id < verts_.size()) throw Error(ErrorKind::InvalidVertex, "vertex id already allocated");
  while (verts_.size() < id) {
    verts_.emplace_back();
    verts_.back().alive = false;
  }
  VertexData vd;
  vd.kind = kind;
  vd.phase = kind == VertexKind::Boundary ? Phase() : phase;
  vd.row = row;
  vd.col = col;
  verts_.push_back(std::move(vd));
  ++alive_;
  return id;
}

const VertexData& ZxDiagram::data(Vertex v) const {
  if (!contains(v)) throw Error(ErrorKind::InvalidVertex, "unknown vertex " + std::to_string(v));
  return verts_[v];
}

VertexData& ZxDiagram::mut(Vertex v) {
  if (!contains(v)) throw Error(ErrorKind::InvalidVertex, "unknown vertex " + std::to_string(v));
  return verts_[v];
}

void ZxDiagram::remove_vertex(Vertex v) {
  VertexData& vd = mut(v);
  if (table_ && vd.var >= 0 && !table_->is_clifford(vd.var)) {
    throw Error(ErrorKind::Contract,
                "phase variable " + std::to_string(vd.var) + " discarded with vertex");
  }
  for (const auto& [w, k] : vd.adj) verts_[w].adj.erase(v);
  vd.adj.clear();
  vd.alive = false;
  --alive_;
}

void ZxDiagram::connect(Vertex v, Vertex w, EdgeKind kind) {
  verts_[v].adj[w] = kind;
  verts_[w].adj[v] = kind;
}

void ZxDiagram::add_edge(Vertex v, Vertex w, EdgeKind kind) {
  if (v == w || connected(v, w)) {
    throw Error(ErrorKind::Contract, "add_edge would create a multi-edge or self-loop");
  }
  mut(w);
  connect(v, w, kind);
}

void ZxDiagram::add_edge_resolving(Vertex v, Vertex w, EdgeKind kind) {
  mut(v);
  mut(w);
  if (v == w) {
    if (is_boundary(v)) throw Error(ErrorKind::Form, "self-loop on a boundary");
    if (kind == EdgeKind::Hadamard) {
      add_to_phase(v, Phase::pi());
      scalar_.add_power(-1);
    }
    return;
  }
  auto existing = edge_kind(v, w);
  if (!existing) {
    connect(v, w, kind);
    return;
  }
  if (is_boundary(v) || is_boundary(w)) {
    throw Error(ErrorKind::Form, "parallel edge on a boundary vertex");
  }
  const EdgeKind fusing = kind_of_same_colour(v, w) ? EdgeKind::Simple : EdgeKind::Hadamard;
  if (*existing == kind) {
    if (kind != fusing) {
      remove_edge(v, w);
      scalar_.add_power(-2);
    }
    return;
  }
  set_edge_kind(v, w, fusing);
  add_to_phase(v, Phase::pi());
  scalar_.add_power(-1);
}

bool ZxDiagram::kind_of_same_colour(Vertex v, Vertex w) const { return kind(v) == kind(w); }

void ZxDiagram::remove_edge(Vertex v, Vertex w) {
  mut(v).adj.erase(w);
  mut(w).adj.erase(v);
}

void ZxDiagram::set_edge_kind(Vertex v, Vertex w, EdgeKind kind) {
  if (!connected(v, w)) throw Error(ErrorKind::Contract, "set_edge_kind on missing edge");
  connect(v, w, kind);
}

std::optional<EdgeKind> ZxDiagram::edge_kind(Vertex v, Vertex w) const {
  const auto& adj = data(v).adj;
  auto it = adj.find(w);
  if (it == adj.end()) return std::nullopt;
  return it->second;
}

void ZxDiagram::set_phase(Vertex v, const Phase& p) { mut(v).phase = p; }

void ZxDiagram::add_to_phase(Vertex v, const Phase& p) {
  VertexData& vd = mut(v);
  if (vd.kind == VertexKind::Boundary) throw Error(ErrorKind::Form, "phase on a boundary");
  if (table_ && vd.var >= 0 && !p.is_clifford()) {
    throw Error(ErrorKind::Contract, "non-Clifford constant added to a tagged vertex");
  }
  vd.phase += p;
}

void ZxDiagram::merge_phase(Vertex keep, Vertex removed) {
  VertexData& k = mut(keep);
  VertexData& r = mut(removed);
  k.phase += r.phase;
  r.phase = Phase();
  if (table_ && r.var >= 0) {
    if (k.var < 0 || table_->is_clifford(k.var)) {
      k.var = r.var;
      k.sign = r.sign;
    } else if (!table_->is_clifford(r.var)) {
      auto& tk = table_->values[static_cast<std::size_t>(k.var)];
      auto& tr = table_->values[static_cast<std::size_t>(r.var)];
      tk = k.sign * r.sign > 0 ? tk + tr : tk - tr;
      tr = Phase();
    }
  }
  r.var = -1;
  r.sign = 1;
}

void ZxDiagram::transfer_phase(Vertex from, Vertex to) {
  VertexData& f = mut(from);
  VertexData& t = mut(to);
  if (t.var >= 0 && table_ && !table_->is_clifford(t.var)) {
    throw Error(ErrorKind::Contract, "phase transfer onto a tagged vertex");
  }
  t.phase += f.phase;
  f.phase = Phase();
  if (f.var >= 0) {
    t.var = f.var;
    t.sign = f.sign;
  }
  f.var = -1;
  f.sign = 1;
}

void ZxDiagram::negate_phase(Vertex v) {
  VertexData& vd = mut(v);
  vd.phase = -vd.phase;
  vd.sign = -vd.sign;
}

void ZxDiagram::set_position(Vertex v, double row, double col) {
  VertexData& vd = mut(v);
  vd.row = row;
  vd.col = col;
}

void ZxDiagram::tag(Vertex v, int var, int sign) {
  VertexData& vd = mut(v);
  vd.var = var;
  vd.sign = sign;
}

void ZxDiagram::record(const std::string& rule, std::vector<Vertex> payload) {
  if (trace_) trace_->push_back({rule, std::move(payload)});
}

std::vector<Vertex> ZxDiagram::neighbor_list(Vertex v) const {
  std::vector<Vertex> out;
  for (const auto& [w, k] : neighbors(v)) out.push_back(w);
  return out;
}

std::vector<Vertex> ZxDiagram::vertices() const {
  std::vector<Vertex> out;
  out.reserve(alive_);
  for (Vertex v = 0; v < verts_.size(); ++v) {
    if (verts_[v].alive) out.push_back(v);
  }
  return out;
}

std::size_t ZxDiagram::num_edges() const {
  std::size_t n = 0;
  for (const auto& vd : verts_) {
    if (vd.alive) n += vd.adj.size();
  }
  return n / 2;
}

std::size_t ZxDiagram::non_clifford_count() const {
  std::size_t n = 0;
  for (const auto& vd : verts_) {
    if (vd.alive && vd.kind != VertexKind::Boundary && !vd.phase.is_clifford()) ++n;
  }
  return n;
}

std::string ZxDiagram::check_invariants() const {
  std::ostringstream err;
  std::vector<int> seen(verts_.size(), 0);
  for (const auto* list : {&inputs_, &outputs_}) {
    for (Vertex b : *list) {
      if (!contains(b) || !is_boundary(b)) {
        err << "boundary list entry " << b << " is not a live boundary; ";
        continue;
      }
      if (degree(b) != 1) err << "boundary " << b << " has degree " << degree(b) << "; ";
      ++seen[b];
    }
  }
  for (Vertex v = 0; v < verts_.size(); ++v) {
    const auto& vd = verts_[v];
    if (!vd.alive) continue;
    if (vd.kind == VertexKind::Boundary && seen[v] != 1) {
      err << "boundary " << v << " listed " << seen[v] << " times; ";
    }
    for (const auto& [w, k] : vd.adj) {
      if (w == v) err << "self-loop at " << v << "; ";
      if (!contains(w)) {
        err << "edge to dead vertex " << w << "; ";
        continue;
      }
      auto it = verts_[w].adj.find(v);
      if (it == verts_[w].adj.end() || it->second != k) err << "asymmetric edge " << v << "; ";
    }
  }
  return err.str();
}

std::map<Vertex, Vertex> append_copy(ZxDiagram& dst, const ZxDiagram& src) {
  std::map<Vertex, Vertex> m;
  for (Vertex v : src.vertices()) {
    const auto& vd = src.data(v);
    m[v] = dst.add_vertex(vd.kind, vd.phase, vd.row, vd.col);
    if (vd.var >= 0) dst.tag(m[v], vd.var, vd.sign);
  }
  for (Vertex v : src.vertices()) {
    for (const auto& [w, k] : src.neighbors(v)) {
      if (v < w) dst.add_edge(m[v], m[w], k);
    }
  }
  return m;
}

ZxDiagram compose(const ZxDiagram& a, const ZxDiagram& b) {
  if (a.outputs().size() != b.inputs().size()) {
    throw Error(ErrorKind::Arity, "composition arity mismatch: " +
                                      std::to_string(a.outputs().size()) + " outputs vs " +
                                      std::to_string(b.inputs().size()) + " inputs");
  }
  ZxDiagram r;
  auto ma = append_copy(r, a);
  double shift = 0.0;
  for (Vertex v : a.vertices()) shift = std::max(shift, a.data(v).col + 1.0);
  auto mb = append_copy(r, b);
  for (const auto& [old, nv] : mb) {
    const auto& vd = r.data(nv);
    r.set_position(nv, vd.row, vd.col + shift);
  }
  std::vector<Vertex> ins, outs;
  for (Vertex v : a.inputs()) ins.push_back(ma[v]);
  for (Vertex v : b.outputs()) outs.push_back(mb[v]);
  for (std::size_t i = 0; i < a.outputs().size(); ++i) {
    Vertex oa = ma[a.outputs()[i]];
    Vertex ib = mb[b.inputs()[i]];
    auto [n1, k1] = *r.neighbors(oa).begin();
    auto [n2, k2] = *r.neighbors(ib).begin();
    r.remove_vertex(oa);
    r.remove_vertex(ib);
    r.add_edge_resolving(n1, n2, compose_kind(k1, k2));
  }
  r.set_inputs(ins);
  r.set_outputs(outs);
  r.scalar() = a.scalar() * b.scalar();
  return r;
}

ZxDiagram adjoint_diagram(const ZxDiagram& d) {
  ZxDiagram r;
  auto m = append_copy(r, d);
  for (const auto& [old, nv] : m) {
    if (r.is_spider(nv)) r.set_phase(nv, -r.phase(nv));
  }
  std::vector<Vertex> ins, outs;
  for (Vertex v : d.outputs()) ins.push_back(m[v]);
  for (Vertex v : d.inputs()) outs.push_back(m[v]);
  r.set_inputs(ins);
  r.set_outputs(outs);
  r.scalar() = d.scalar().conj();
  return r;
}

std::complex<double> scalar_value(const Scalar& s) { return s.value(); }

std::string diagram_to_json(const ZxDiagram& d) {
  using nlohmann::json;
  json j;
  j["vertices"] = json::array();
  for (Vertex v : d.vertices()) {
    const auto& vd = d.data(v);
    j["vertices"].push_back({{"id", v},
                             {"kind", kind_name(vd.kind)},
                             {"phase", vd.phase.to_fraction()},
                             {"row", vd.row},
                             {"col", vd.col}});
  }
  j["edges"] = json::array();
  for (Vertex v : d.vertices()) {
    for (const auto& [w, k] : d.neighbors(v)) {
      if (v < w) j["edges"].push_back({v, w, k == EdgeKind::Simple ? "S" : "H"});
    }
  }
  j["inputs"] = d.inputs();
  j["outputs"] = d.outputs();
  const Scalar& s = d.scalar();
  json pairs = json::array();
  for (const auto& p : s.phase_pairs) pairs.push_back(p.to_fraction());
  j["scalar"] = {{"zero", s.is_zero},
                 {"sqrt2_power", s.sqrt2_power},
                 {"phase", s.phase.to_fraction()},
                 {"phase_pairs", pairs},
                 {"float", {s.float_factor.real(), s.float_factor.imag()}}};
  return j.dump(1);
}

ZxDiagram diagram_from_json(const std::string& text) {
  using nlohmann::json;
  ZxDiagram d;
  try {
    json j = json::parse(text);
    std::vector<json> vs(j.at("vertices").begin(), j.at("vertices").end());
    std::sort(vs.begin(), vs.end(), [](const json& a, const json& b) {
      return a.at("id").get<Vertex>() < b.at("id").get<Vertex>();
    });
    for (const auto& v : vs) {
      d.add_vertex_at(v.at("id").get<Vertex>(), kind_from_name(v.at("kind").get<std::string>()),
                      Phase::from_fraction(v.value("phase", std::string("0"))),
                      v.value("row", 0.0), v.value("col", 0.0));
    }
    for (const auto& e : j.at("edges")) {
      std::string k = e.at(2).get<std::string>();
      if (k != "S" && k != "H") throw Error(ErrorKind::Parse, "unknown edge kind '" + k + "'");
      d.add_edge_resolving(e.at(0).get<Vertex>(), e.at(1).get<Vertex>(),
                           k == "S" ? EdgeKind::Simple : EdgeKind::Hadamard);
    }
    d.set_inputs(j.at("inputs").get<std::vector<Vertex>>());
    d.set_outputs(j.at("outputs").get<std::vector<Vertex>>());
    if (j.contains("scalar")) {
      const json& s = j["scalar"];
      Scalar& sc = d.scalar();
      sc.is_zero = s.value("zero", false);
      sc.sqrt2_power = s.value("sqrt2_power", 0);
      sc.phase = Phase::from_fraction(s.value("phase", std::string("0")));
      if (s.contains("phase_pairs")) {
        for (const auto& p : s["phase_pairs"]) sc.phase_pairs.push_back(Phase::from_fraction(p));
      }
      if (s.contains("float")) sc.float_factor = {s["float"].at(0), s["float"].at(1)};
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("diagram JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorKind::Parse, std::string("diagram JSON: ") + e.what());
  }
  std::string bad = d.check_invariants();
  if (!bad.empty()) throw Error(ErrorKind::Parse, "diagram JSON: " + bad);
  return d;
}

}  // namespace zxopt
