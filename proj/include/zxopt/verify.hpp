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

namespace zxopt {

/**
 * Dense linear map, rows indexed by output bits and columns by input bits.
 * Boundary (or qubit) 0 is the most significant bit of an index.
 */
struct DenseMap {
  std::size_t rows = 1;
  std::size_t cols = 1;
  std::vector<std::complex<double>> data;

  DenseMap() : data(1, 1.0) {}
  DenseMap(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  std::complex<double>& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const std::complex<double>& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  DenseMap adjoint() const;
  DenseMap operator*(const DenseMap& o) const;
  double max_abs_diff(const DenseMap& o) const;
};

constexpr std::size_t kTensorLegLimit = 20;
constexpr std::size_t kOracleQubitLimit = 10;

/** Exact contraction of the diagram including its scalar. */
DenseMap to_tensor(const ZxDiagram& d);
/** Gate-by-gate unitary of a circuit (CCZ/CCX applied directly). */
DenseMap circuit_unitary(const Circuit& c);

/** True if b = e^{i phi} a for some phi, within tol, aligning on a's largest entry. */
bool equal_up_to_phase(const DenseMap& a, const DenseMap& b, double tol);
/** True if b = z a for some nonzero complex z, within tol (relative to max |a|). */
bool proportional(const DenseMap& a, const DenseMap& b, double tol);

bool equal_oracle(const Circuit& c1, const Circuit& c2, double tol = 1e-9);

struct Verdict {
  bool equal = false;
  RewriteTrace certificate;
  std::string reason;
};

/** True if every input runs to the same-index output through phase-0 spiders only. */
bool is_bare_identity(const ZxDiagram& d, std::string* why = nullptr);

/** Reduces diagram(c1) composed with diagram(adjoint(c2)); Equal only if it becomes bare wires. */
Verdict verify_equality_rewrite(const Circuit& c1, const Circuit& c2);
/** Replays the certificate on a freshly built composition and checks it ends in bare wires. */
bool check_certificate(const Circuit& c1, const Circuit& c2, const RewriteTrace& cert);

}  // namespace zxopt
