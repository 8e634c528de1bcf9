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

#include <string>

#include "zxopt/circuit.hpp"
#include "zxopt/diagram.hpp"

namespace zxopt {

enum class Strategy { Clifford, Gadget, Teleport };

Strategy strategy_from_string(const std::string& s);

/**
 * to_graph_like, then {basic_cleanup, lc_simp, pivot_simp} to a fixed point,
 * plus boundary pivots and copies that only involve Clifford phases.
 */
void clifford_simp(ZxDiagram& d);
/** The full eleven-step schedule with its loop-backs. */
void gadget_simp(ZxDiagram& d);

/** True if some spider without a boundary neighbour is left. */
bool has_internal_spiders(const ZxDiagram& d);

/**
 * Runs gadget_simp symbolically and writes the resulting phases back into the
 * gate list of decompose_ccz(c). Only phase values change.
 */
Circuit phase_teleport(const Circuit& c);

}  // namespace zxopt
