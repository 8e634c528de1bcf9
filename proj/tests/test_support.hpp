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

#include <random>

#include "zxopt/circuit.hpp"
#include "zxopt/verify.hpp"

namespace zxopt::testing {

struct RandomCircuitOptions {
  std::size_t qubits = 3;
  std::size_t gates = 20;
  bool clifford_only = false;
  bool allow_ccz = false;
};

inline Circuit random_circuit(std::uint32_t seed, const RandomCircuitOptions& o) {
  std::mt19937 rng(seed);
  Circuit c;
  c.qubits = o.qubits;
  auto qubit = [&] { return std::uniform_int_distribution<std::size_t>(0, o.qubits - 1)(rng); };
  auto two = [&] {
    std::size_t a = qubit(), b = qubit();
    while (b == a) b = qubit();
    return std::pair{a, b};
  };
  int kinds = o.allow_ccz && o.qubits >= 3 ? 7 : 6;
  for (std::size_t i = 0; i < o.gates; ++i) {
    int k = std::uniform_int_distribution<int>(0, kinds - 1)(rng);
    std::int64_t num = std::uniform_int_distribution<int>(1, 7)(rng);
    Phase p = o.clifford_only ? Phase(2 * (num % 4), 4) : Phase(num, 4);
    if (o.qubits < 2 && k >= 3) k = k % 3;
    switch (k) {
      case 0: c.add(Gate::zphase(qubit(), p)); break;
      case 1: c.add(Gate::xphase(qubit(), p)); break;
      case 2: c.add(Gate::h(qubit())); break;
      case 3: { auto [a, b] = two(); c.add(Gate::cnot(a, b)); break; }
      case 4: { auto [a, b] = two(); c.add(Gate::cz(a, b)); break; }
      case 5: { auto [a, b] = two(); c.add(Gate::zphase(a, p)); c.add(Gate::cnot(b, a)); break; }
      default: {
        std::size_t a = qubit(), b = qubit(), t = qubit();
        while (b == a) b = qubit();
        while (t == a || t == b) t = qubit();
        c.add(Gate::ccx(a, b, t));
      }
    }
  }
  return c;
}

/** Diagram semantics equal a circuit's unitary up to a nonzero scalar. */
inline bool diagram_matches(const ZxDiagram& d, const Circuit& c, double tol = 1e-8) {
  return proportional(circuit_unitary(c), to_tensor(d), tol);
}

}  // namespace zxopt::testing
