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

#include "zxopt/simulate.hpp"

#include <cmath>

#include <json.hpp>

#include "zxopt/error.hpp"
#include "zxopt/rules.hpp"
#include "zxopt/simplify.hpp"
#include "zxopt/verify.hpp"

namespace zxopt {

namespace {

constexpr double kRegistrationTolerance = 1e-10;

/** A state with `legs` outputs held by one spider of the given colour. */
ZxDiagram spider_state(VertexKind kind, Phase phase, std::size_t legs) {
  ZxDiagram d;
  Vertex s = d.add_vertex(kind, phase);
  std::vector<Vertex> outs;
  for (std::size_t i = 0; i < legs; ++i) {
    Vertex b = d.add_vertex(VertexKind::Boundary);
    d.add_edge(s, b, EdgeKind::Simple);
    outs.push_back(b);
  }
  d.set_outputs(outs);
  return d;
}

ZxDiagram magic_states(std::size_t arity) {
  ZxDiagram d;
  std::vector<Vertex> outs;
  for (std::size_t i = 0; i < arity; ++i) {
    Vertex s = d.add_vertex(VertexKind::Z, Phase::quarter_pi());
    Vertex b = d.add_vertex(VertexKind::Boundary);
    d.add_edge(s, b, EdgeKind::Simple);
    outs.push_back(b);
  }
  d.set_outputs(outs);
  return d;
}

Scalar weight(int sqrt2_power, Phase phase) {
  Scalar s;
  s.add_power(sqrt2_power);
  s.add_phase(phase);
  return s;
}

/** Replaces boundary b by a basis-state spider: |x> = X(x pi) / sqrt2. */
void close_boundary(ZxDiagram& d, Vertex b, bool bit) {
  Vertex n = d.neighbors(b).begin()->first;
  EdgeKind k = d.neighbors(b).begin()->second;
  Vertex x = d.add_vertex(VertexKind::X, bit ? Phase::pi() : Phase(), d.data(b).row, d.data(b).col);
  d.remove_vertex(b);
  d.add_edge_resolving(x, n, k);
  d.scalar().add_power(-1);
}

void check_bits(const std::string& bits, std::size_t n) {
  if (bits.size() != n) {
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(n) + " bits, got '" + bits + "'");
  }
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw Error(ErrorKind::InvalidArgument, "bit strings hold only 0 and 1");
  }
}

/** Reduces a closed Clifford diagram all the way to its scalar. */
std::complex<double> reduce_closed(ZxDiagram& d) {
  clifford_simp(d);
  fold_scalar_components(d, false);
  if (d.num_vertices() != 0) {
    throw Error(ErrorKind::Contract, "closed Clifford diagram did not reduce to a scalar");
  }
  return scalar_value(d.scalar());
}

std::vector<Vertex> t_spiders(const ZxDiagram& d) {
  std::vector<Vertex> out;
  for (Vertex v : d.vertices()) {
    if (d.is_spider(v) && !d.phase(v).is_clifford()) out.push_back(v);
  }
  return out;
}

/** Plugs a fragment into the chosen spiders after peeling pi/4 off each of them. */
void plug(ZxDiagram& d, const std::vector<Vertex>& targets, const DecompositionTerm& term) {
  auto ids = append_copy(d, term.fragment);
  const auto& outs = term.fragment.outputs();
  for (std::size_t i = 0; i < targets.size(); ++i) {
    d.add_to_phase(targets[i], -Phase::quarter_pi());
    Vertex b = ids.at(outs[i]);
    Vertex n = d.neighbors(b).begin()->first;
    EdgeKind k = d.neighbors(b).begin()->second;
    d.remove_vertex(b);
    d.add_edge_resolving(targets[i], n, k);
  }
  d.set_outputs({});
  d.scalar() *= term.weight;
}

std::complex<double> decompose(ZxDiagram& d, const DecompositionStrategy& strategy, std::size_t& leaves) {
  gadget_simp(d);
  fold_scalar_components(d, true);
  if (d.scalar().is_zero) {
    ++leaves;
    return 0.0;
  }
  std::vector<Vertex> ts = t_spiders(d);
  if (ts.empty()) {
    ++leaves;
    return reduce_closed(d);
  }
  const DecompositionStrategy& use = ts.size() >= strategy.arity ? strategy : single_decomposition();
  ts.resize(use.arity);
  std::complex<double> sum = 0.0;
  for (const DecompositionTerm& term : use.terms) {
    ZxDiagram branch = d;
    plug(branch, ts, term);
    sum += decompose(branch, strategy, leaves);
  }
  return sum;
}

}  // namespace

DecompositionStrategy register_decomposition(const std::string& name, std::size_t arity,
                                             std::vector<DecompositionTerm> terms) {
  if (arity == 0 || arity > 8) throw Error(ErrorKind::InvalidDecomposition, "arity must be in 1..8");
  if (terms.empty()) throw Error(ErrorKind::InvalidDecomposition, "decomposition has no terms");
  DenseMap target = to_tensor(magic_states(arity));
  DenseMap sum(target.rows, target.cols);
  for (const DecompositionTerm& t : terms) {
    if (!t.fragment.inputs().empty() || t.fragment.outputs().size() != arity) {
      throw Error(ErrorKind::InvalidDecomposition, "fragment must be a state on " + std::to_string(arity) + " legs");
    }
    for (Vertex v : t.fragment.vertices()) {
      if (t.fragment.is_spider(v) && !t.fragment.phase(v).is_clifford()) {
        throw Error(ErrorKind::InvalidDecomposition, "fragment is not Clifford");
      }
    }
    DenseMap f = to_tensor(t.fragment);
    std::complex<double> w = scalar_value(t.weight);
    for (std::size_t i = 0; i < sum.data.size(); ++i) sum.data[i] += w * f.data[i];
  }
  double diff = target.max_abs_diff(sum);
  if (!(diff <= kRegistrationTolerance)) {
    throw Error(ErrorKind::InvalidDecomposition,
                "decomposition '" + name + "' misses the magic state by " + std::to_string(diff));
  }
  return {name, arity, std::move(terms)};
}

const DecompositionStrategy& single_decomposition() {
  static const DecompositionStrategy s = register_decomposition(
      "single", 1,
      {{weight(-1, Phase()), spider_state(VertexKind::X, Phase(), 1)},
       {weight(-1, Phase::quarter_pi()), spider_state(VertexKind::X, Phase::pi(), 1)}});
  return s;
}

const DecompositionStrategy& paired_decomposition() {
  static const DecompositionStrategy s = register_decomposition(
      "paired", 2,
      {{weight(0, Phase()), spider_state(VertexKind::Z, Phase::half_pi(), 2)},
       {weight(0, Phase::quarter_pi()), spider_state(VertexKind::X, Phase::pi(), 2)}});
  return s;
}

const DecompositionStrategy& decomposition_by_name(const std::string& name) {
  if (name == "single") return single_decomposition();
  if (name == "paired") return paired_decomposition();
  throw Error(ErrorKind::InvalidArgument, "unknown decomposition '" + name + "'");
}

ZxDiagram amplitude_diagram(const Circuit& c, const std::string& in_bits, const std::string& out_bits) {
  check_bits(in_bits, c.qubits);
  check_bits(out_bits, c.qubits);
  ZxDiagram d = circuit_to_diagram(c);
  std::vector<Vertex> ins = d.inputs(), outs = d.outputs();
  d.set_inputs({});
  d.set_outputs({});
  for (std::size_t q = 0; q < c.qubits; ++q) {
    close_boundary(d, ins[q], in_bits[q] == '1');
    close_boundary(d, outs[q], out_bits[q] == '1');
  }
  return d;
}

std::complex<double> clifford_amplitude(const Circuit& c, const std::string& in_bits,
                                        const std::string& out_bits) {
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::CCZ || g.kind == GateKind::CCX || (g.is_phase() && !g.phase.is_clifford())) {
      throw Error(ErrorKind::NotClifford, "circuit contains a non-Clifford gate");
    }
  }
  ZxDiagram d = amplitude_diagram(c, in_bits, out_bits);
  return reduce_closed(d);
}

AmplitudeResult stab_decomp_amplitude(const Circuit& c, const std::string& in_bits,
                                      const std::string& out_bits,
                                      const DecompositionStrategy& strategy) {
  for (const Gate& g : c.gates) {
    if (g.is_phase() && !g.phase.is_clifford() && !g.phase.is_t_like()) {
      throw Error(ErrorKind::UnsupportedAngle, "phase " + g.phase.to_fraction() + " pi is not a T-like angle");
    }
  }
  ZxDiagram d = amplitude_diagram(c, in_bits, out_bits);
  gadget_simp(d);
  AmplitudeResult r;
  r.t_count_after_simp = d.non_clifford_count();
  r.amplitude = decompose(d, strategy, r.terms);
  return r;
}

std::string amplitude_json(const AmplitudeResult& r) {
  nlohmann::json j;
  j["amplitude"] = {r.amplitude.real(), r.amplitude.imag()};
  j["terms"] = r.terms;
  j["t_count_after_simp"] = r.t_count_after_simp;
  return j.dump();
}

}  // namespace zxopt
