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

#include "zxopt/phase.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace zxopt {

Phase::Phase(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("phase with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num %= 2 * den;
  if (num < 0) num += 2 * den;
  num_ = num;
  den_ = den;
}

double Phase::to_double() const {
  return std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
}

std::complex<double> Phase::exp_i() const {
  switch (den_) {
    case 1:
      return num_ == 0 ? 1.0 : -1.0;
    case 2:
      return num_ == 1 ? std::complex<double>(0, 1) : std::complex<double>(0, -1);
    default:
      return std::polar(1.0, to_double());
  }
}

Phase Phase::operator+(const Phase& o) const {
  std::int64_t l = std::lcm(den_, o.den_);
  return {num_ * (l / den_) + o.num_ * (l / o.den_), l};
}

Phase Phase::operator-(const Phase& o) const { return *this + (-o); }

Phase Phase::operator-() const { return {-num_, den_}; }

Phase Phase::operator*(std::int64_t k) const { return {(num_ * k) % (2 * den_), den_}; }

Phase& Phase::operator+=(const Phase& o) { return *this = *this + o; }

Phase& Phase::operator-=(const Phase& o) { return *this = *this - o; }

std::string Phase::to_fraction() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto first = s.data();
  auto last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw std::invalid_argument("bad integer '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Phase Phase::from_fraction(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return {parse_int(s), 1};
  return {parse_int(std::string_view(s).substr(0, slash)),
          parse_int(std::string_view(s).substr(slash + 1))};
}

std::string Phase::to_qasm() const {
  if (num_ == 0) return "0";
  std::string out = num_ == 1 ? "pi" : std::to_string(num_) + "*pi";
  if (den_ != 1) out += "/" + std::to_string(den_);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Phase& p) {
  return os << p.to_fraction() << "pi";
}

}  // namespace zxopt
