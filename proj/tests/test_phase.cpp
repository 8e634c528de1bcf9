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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "zxopt/phase.hpp"
#include "zxopt/scalar.hpp"

namespace zxopt {
namespace {

TEST(Phase, NormalizesModuloTwoPi) {
  EXPECT_EQ(Phase(9, 4), Phase(1, 4));
  EXPECT_EQ(Phase(-1, 4), Phase(7, 4));
  EXPECT_EQ(Phase(2, 4), Phase::half_pi());
  EXPECT_EQ(Phase(4, 2), Phase::zero());
  EXPECT_EQ(Phase(1, 4).den(), 4);
}

TEST(Phase, Arithmetic) {
  EXPECT_EQ(Phase(1, 4) + Phase(1, 4), Phase::half_pi());
  EXPECT_EQ(Phase(1, 4) - Phase(1, 2), Phase(7, 4));
  EXPECT_EQ(-Phase::half_pi(), Phase(3, 2));
  EXPECT_EQ(Phase(3, 4) * 4, Phase::pi());
  Phase p = Phase::pi();
  p += Phase::pi();
  EXPECT_TRUE(p.is_zero());
}

TEST(Phase, Classification) {
  EXPECT_TRUE(Phase::pi().is_pauli());
  EXPECT_TRUE(Phase::zero().is_pauli());
  EXPECT_TRUE(Phase(3, 2).is_proper_clifford());
  EXPECT_TRUE(Phase(3, 2).is_clifford());
  EXPECT_FALSE(Phase(5, 4).is_clifford());
  EXPECT_TRUE(Phase(5, 4).is_t_like());
  EXPECT_FALSE(Phase(1, 8).is_t_like());
}

TEST(Phase, TextForms) {
  EXPECT_EQ(Phase(3, 4).to_fraction(), "3/4");
  EXPECT_EQ(Phase::pi().to_fraction(), "1");
  EXPECT_EQ(Phase::from_fraction("7/4"), Phase(7, 4));
  EXPECT_EQ(Phase::from_fraction("0"), Phase::zero());
  EXPECT_THROW(Phase::from_fraction("x/2"), std::invalid_argument);
  EXPECT_THROW(Phase::from_fraction("1/0"), std::invalid_argument);
  EXPECT_EQ(Phase(1, 4).to_qasm(), "pi/4");
}

TEST(Phase, Value) {
  EXPECT_NEAR(Phase(1, 4).to_double(), std::numbers::pi / 4, 1e-15);
  EXPECT_NEAR(std::abs(Phase::pi().exp_i() + 1.0), 0.0, 1e-15);
}

TEST(Scalar, ClosedFormPairs) {
  const std::complex<double> i(0, 1);
  for (auto [p, expect] : {std::pair{Phase::zero(), std::complex<double>(2.0)},
                           std::pair{Phase::half_pi(), 1.0 + i},
                           std::pair{Phase(3, 2), 1.0 - i},
                           std::pair{Phase(1, 4), 1.0 + std::exp(i * std::numbers::pi / 4.0)}}) {
    Scalar s;
    s.add_phase_pair(p);
    EXPECT_LT(std::abs(s.value() - expect), 1e-14) << p;
  }
  Scalar z;
  z.add_phase_pair(Phase::pi());
  EXPECT_TRUE(z.is_zero);
  EXPECT_EQ(z.value(), std::complex<double>(0.0));
}

TEST(Scalar, ProductAndConjugate) {
  Scalar a;
  a.add_power(3);
  a.add_phase(Phase(1, 4));
  a.add_phase_pair(Phase(3, 4));
  Scalar b;
  b.add_power(-1);
  b.add_float({0.5, 0.25});
  std::complex<double> expect = a.value() * b.value();
  EXPECT_LT(std::abs((a * b).value() - expect), 1e-13);
  EXPECT_LT(std::abs(a.conj().value() - std::conj(a.value())), 1e-13);
  EXPECT_TRUE(a.is_exact());
  EXPECT_FALSE(b.is_exact());
  Scalar c = a;
  c *= Scalar::zero();
  EXPECT_EQ(c.value(), std::complex<double>(0.0));
}

}  // namespace
}  // namespace zxopt
