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

#include "zxopt/scalar.hpp"

#include <cmath>
#include <sstream>

namespace zxopt {

Scalar Scalar::zero() {
  Scalar s;
  s.is_zero = true;
  return s;
}

std::complex<double> Scalar::value() const {
  if (is_zero) return 0.0;
  std::complex<double> v = std::pow(std::sqrt(2.0), sqrt2_power) * phase.exp_i();
  for (const auto& p : phase_pairs) v *= 1.0 + p.exp_i();
  return v * float_factor;
}

void Scalar::add_phase_pair(const Phase& p) {
  if (p == Phase::pi()) {
    is_zero = true;
  } else if (p.is_zero()) {
    sqrt2_power += 2;
  } else if (p == Phase::half_pi()) {
    sqrt2_power += 1;
    phase += Phase::quarter_pi();
  } else if (p == Phase(3, 2)) {
    sqrt2_power += 1;
    phase -= Phase::quarter_pi();
  } else {
    phase_pairs.push_back(p);
  }
}

void Scalar::add_float(std::complex<double> z) {
  if (z == 0.0) {
    is_zero = true;
    return;
  }
  float_factor *= z;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  is_zero = is_zero || o.is_zero;
  sqrt2_power += o.sqrt2_power;
  phase += o.phase;
  phase_pairs.insert(phase_pairs.end(), o.phase_pairs.begin(), o.phase_pairs.end());
  float_factor *= o.float_factor;
  return *this;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r = *this;
  r *= o;
  return r;
}

Scalar Scalar::conj() const {
  Scalar r = *this;
  r.phase = -phase;
  for (auto& p : r.phase_pairs) p = -p;
  r.float_factor = std::conj(float_factor);
  return r;
}

std::string Scalar::to_string() const {
  if (is_zero) return "0";
  std::ostringstream os;
  os << "sqrt2^" << sqrt2_power << " * exp(i " << phase << ")";
  for (const auto& p : phase_pairs) os << " * (1+exp(i " << p << "))";
  if (!is_exact()) os << " * (" << float_factor.real() << "+" << float_factor.imag() << "i)";
  return os.str();
}

}  // namespace zxopt
