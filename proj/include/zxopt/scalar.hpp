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

#include "zxopt/phase.hpp"

namespace zxopt {

/**
 * Global scalar carried by a diagram:
 *   0                                  if is_zero
 *   2^(sqrt2_power/2) * e^(i*phase) * prod_k (1 + e^(i*phase_pairs[k])) * float_factor
 * The float factor is only touched by numerical folds that have no exact form.
 */
struct Scalar {
  bool is_zero = false;
  int sqrt2_power = 0;
  Phase phase;
  std::vector<Phase> phase_pairs;
  std::complex<double> float_factor{1.0, 0.0};

  static Scalar one() { return {}; }
  static Scalar zero();

  std::complex<double> value() const;
  bool is_exact() const { return float_factor == std::complex<double>(1.0, 0.0); }

  void add_power(int k) { sqrt2_power += k; }
  void add_phase(const Phase& p) { phase += p; }
  /** Multiplies by (1 + e^(i*p)), folding the values with a closed form. */
  void add_phase_pair(const Phase& p);
  void add_float(std::complex<double> z);
  void set_zero() { is_zero = true; }

  Scalar& operator*=(const Scalar& o);
  Scalar operator*(const Scalar& o) const;
  Scalar conj() const;

  std::string to_string() const;
};

}  // namespace zxopt
