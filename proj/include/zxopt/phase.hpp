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
#include <cstdint>
#include <string>

namespace zxopt {

/**
 * An angle stored as an exact rational multiple of pi, reduced into [0, 2).
 * The fraction is always kept in lowest terms with a positive denominator.
 */
class Phase {
 public:
  constexpr Phase() = default;
  Phase(std::int64_t num, std::int64_t den);

  static Phase zero() { return {}; }
  static Phase pi() { return {1, 1}; }
  static Phase half_pi() { return {1, 2}; }
  static Phase quarter_pi() { return {1, 4}; }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_pauli() const { return den_ == 1; }
  bool is_proper_clifford() const { return den_ == 2; }
  bool is_clifford() const { return den_ <= 2; }
  bool is_t_like() const { return den_ == 4; }

  double to_double() const;
  std::complex<double> exp_i() const;

  Phase operator+(const Phase& o) const;
  Phase operator-(const Phase& o) const;
  Phase operator-() const;
  Phase operator*(std::int64_t k) const;
  Phase& operator+=(const Phase& o);
  Phase& operator-=(const Phase& o);

  bool operator==(const Phase& o) const = default;

  /** Renders as "num/den" (or "num" when den is 1); used by the JSON format. */
  std::string to_fraction() const;
  /** Parses "num/den" or "num". Throws std::invalid_argument. */
  static Phase from_fraction(const std::string& s);

  /** Renders for QASM, e.g. "pi/4", "3*pi/2", "0". */
  std::string to_qasm() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Phase& p);

}  // namespace zxopt
