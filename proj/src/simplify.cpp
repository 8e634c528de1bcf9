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

#include "zxopt/simplify.hpp"

#include "zxopt/error.hpp"
#include "zxopt/rules.hpp"

namespace zxopt {

Strategy strategy_from_string(const std::string& s) {
  if (s == "clifford") return Strategy::Clifford;
  if (s == "gadget") return Strategy::Gadget;
  if (s == "teleport") return Strategy::Teleport;
  throw Error(ErrorKind::InvalidArgument, "unknown strategy '" + s + "'");
}

namespace {

std::size_t interior_clifford(ZxDiagram& d) {
  std::size_t total = 0;
  while (true) {
    std::size_t n = basic_cleanup(d);
    n += lc_simp(d);
    n += pivot_simp(d);
    total += n;
    if (n == 0) return total;
  }
}

}  // namespace

void clifford_simp(ZxDiagram& d) {
  to_graph_like(d);
  while (true) {
    std::size_t n = interior_clifford(d);
    // Pauli spiders fenced in by boundary spiders only go away through a boundary pivot.
    n += gadgetize_boundary(d, true);
    n += copy_simp(d);
    n += basic_cleanup(d);
    if (n == 0) return;
  }
}

bool has_internal_spiders(const ZxDiagram& d) {
  for (Vertex v : d.vertices()) {
    if (is_internal(d, v)) return true;
  }
  return false;
}

void gadget_simp(ZxDiagram& d) {
  to_graph_like(d);
  while (true) {
    std::size_t n = interior_clifford(d);  // steps 1-6
    n += gadgetize_boundary(d);            // step 7
    n += gadgetize_internal(d);            // step 8
    n += basic_cleanup(d);
    while (true) {
      n += copy_simp(d);  // step 9
      std::size_t merged = gadget_merge_simp(d);  // step 10
      n += merged;
      if (merged == 0 || match_gadget_copy(d).empty()) break;
    }
    n += gadget_single_simp(d);  // step 11
    n += basic_cleanup(d);
    // New internal Clifford spiders send us back to step 4; so does any other
    // change, and a pass without changes is the fixed point.
    if (n == 0) return;
  }
}

Circuit phase_teleport(const Circuit& c) {
  Circuit out = decompose_ccz(c);
  std::vector<std::optional<Vertex>> gate_vertex;
  ZxDiagram d = circuit_to_diagram(out, &gate_vertex);
  PhaseTable table;
  std::vector<int> gate_var(out.gates.size(), -1);
  for (std::size_t i = 0; i < out.gates.size(); ++i) {
    if (gate_vertex[i] && !out.gates[i].phase.is_clifford()) {
      gate_var[i] = table.new_var(out.gates[i].phase);
      d.tag(*gate_vertex[i], gate_var[i], 1);
    }
  }
  d.attach_phase_table(&table);
  gadget_simp(d);
  for (std::size_t i = 0; i < out.gates.size(); ++i) {
    if (gate_var[i] >= 0) out.gates[i].phase = table.values[static_cast<std::size_t>(gate_var[i])];
  }
  return out;
}

}  // namespace zxopt
