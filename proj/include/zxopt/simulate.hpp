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

#include <complex>
#include <string>
#include <vector>

#include "zxopt/circuit.hpp"
#include "zxopt/diagram.hpp"
#include "zxopt/scalar.hpp"

namespace zxopt {

/** One weighted Clifford state; the fragment has only output legs. */
struct DecompositionTerm {
  Scalar weight;
  ZxDiagram fragment;
};

/** A verified way of writing `arity` copies of the T magic state as a sum of Clifford states. */
struct DecompositionStrategy {
  std::string name;
  std::size_t arity = 0;
  std::vector<DecompositionTerm> terms;
};

/**
 * Checks that sum(weight * fragment) equals the product of `arity` T magic
 * states to 1e-10 and returns the strategy. Throws Error(InvalidDecomposition).
 */
DecompositionStrategy register_decomposition(const std::string& name, std::size_t arity,
                                             std::vector<DecompositionTerm> terms);

/** |T> = |0> + e^{i pi/4}|1>. */
const DecompositionStrategy& single_decomposition();
/** |TT> = (|00> + i|11>) + e^{i pi/4}(|01> + |10>). */
const DecompositionStrategy& paired_decomposition();
/** Looks up "single" or "paired"; throws Error(InvalidArgument). */
const DecompositionStrategy& decomposition_by_name(const std::string& name);

/** Closes the circuit diagram with basis states; bit strings index qubit 0 first. */
ZxDiagram amplitude_diagram(const Circuit& c, const std::string& in_bits, const std::string& out_bits);

/** <out|C|in> for a Clifford circuit by reducing the closed diagram to a scalar. */
std::complex<double> clifford_amplitude(const Circuit& c, const std::string& in_bits,
                                        const std::string& out_bits);

struct AmplitudeResult {
  std::complex<double> amplitude;
  std::size_t terms = 0;
  std::size_t t_count_after_simp = 0;
};

/** <out|C|in> for Clifford+T circuits by recursive magic-state decomposition. */
AmplitudeResult stab_decomp_amplitude(const Circuit& c, const std::string& in_bits,
                                      const std::string& out_bits,
                                      const DecompositionStrategy& strategy);

std::string amplitude_json(const AmplitudeResult& r);

}  // namespace zxopt
