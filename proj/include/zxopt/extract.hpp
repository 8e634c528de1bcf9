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

#include "zxopt/circuit.hpp"
#include "zxopt/diagram.hpp"
#include "zxopt/mat2.hpp"

namespace zxopt {

constexpr int kMaxLookaheadRows = 3;

struct ExtractOptions {
  bool column_heuristic = false;
  /** Row sums of up to this many extra rows are tried before elimination; capped at 3. */
  int lookahead_rows = 1;
  /** Stop elimination as soon as a vertex becomes extractable. */
  bool early_stop = true;
};

/**
 * Walks from the outputs to the inputs, peeling frontier phases, CZs and
 * extractable vertices, with CNOTs from row operations. The diagram is copied.
 * Throws Error(NoGflow) when no progress is possible.
 */
Circuit extract_circuit(const ZxDiagram& d, const ExtractOptions& opts = {});

enum class CliffordLayer { LocalIn, CzIn, Cnot, Hadamard, CzOut, LocalOut };

struct LayeredClifford {
  Circuit circuit;
  /** Gate counts of the six layers, in circuit order. */
  std::array<std::size_t, 6> layer_sizes{};
};

/** Local Clifford, CZ, CNOT, H, CZ, local Clifford. Throws Error(NotClifford). */
LayeredClifford extract_clifford_normal_form(const ZxDiagram& d);

/** True if the gate list splits into the six layers in order (layers may be empty). */
bool has_clifford_layer_shape(const Circuit& c);

}  // namespace zxopt
