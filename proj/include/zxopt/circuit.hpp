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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "zxopt/diagram.hpp"
#include "zxopt/phase.hpp"

namespace zxopt {

enum class GateKind { ZPhase, XPhase, H, CNOT, CZ, SWAP, CCZ, CCX };

/**
 * A gate on up to three qubits. For CNOT q[0] is the control and q[1] the
 * target; for CCX q[2] is the target.
 */
struct Gate {
  GateKind kind = GateKind::H;
  std::array<std::size_t, 3> q{};
  Phase phase;

  static Gate zphase(std::size_t q0, Phase p) { return {GateKind::ZPhase, {q0, 0, 0}, p}; }
  static Gate xphase(std::size_t q0, Phase p) { return {GateKind::XPhase, {q0, 0, 0}, p}; }
  static Gate h(std::size_t q0) { return {GateKind::H, {q0, 0, 0}, {}}; }
  static Gate cnot(std::size_t c, std::size_t t) { return {GateKind::CNOT, {c, t, 0}, {}}; }
  static Gate cz(std::size_t a, std::size_t b) { return {GateKind::CZ, {a, b, 0}, {}}; }
  static Gate swap(std::size_t a, std::size_t b) { return {GateKind::SWAP, {a, b, 0}, {}}; }
  static Gate ccz(std::size_t a, std::size_t b, std::size_t c) { return {GateKind::CCZ, {a, b, c}, {}}; }
  static Gate ccx(std::size_t a, std::size_t b, std::size_t t) { return {GateKind::CCX, {a, b, t}, {}}; }

  std::size_t arity() const;
  bool is_phase() const { return kind == GateKind::ZPhase || kind == GateKind::XPhase; }
  bool operator==(const Gate& o) const;
};

struct Circuit {
  std::string name;
  std::size_t qubits = 0;
  std::vector<Gate> gates;

  /** Validates qubit indices; throws Error(InvalidArgument). */
  void add(const Gate& g);
  bool operator==(const Circuit& o) const { return qubits == o.qubits && gates == o.gates; }
};

struct Stats {
  std::size_t qubits = 0;
  std::size_t total_gates = 0;
  std::size_t t_count = 0;
  std::size_t two_qubit_count = 0;
  std::size_t depth = 0;
};

Circuit parse_qasm(const std::string& text);
std::string emit_qasm(const Circuit& c);
Circuit parse_qc(const std::string& text);
/** Picks the parser from the extension (.qc or .tfc vs anything else). */
Circuit load_circuit_file(const std::string& path);

Circuit adjoint_circuit(const Circuit& c);
Circuit decompose_ccz(const Circuit& c);

Stats stats(const Circuit& c);
std::string stats_json(const Stats& s);

/**
 * Translates a circuit gate by gate. If gate_vertices is given it receives,
 * for every gate of decompose_ccz(c), the spider created for phase gates.
 */
ZxDiagram circuit_to_diagram(const Circuit& c,
                             std::vector<std::optional<Vertex>>* gate_vertices = nullptr);

}  // namespace zxopt
