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

#include "test_support.hpp"
#include "zxopt/error.hpp"
#include "zxopt/rules.hpp"
#include "zxopt/simplify.hpp"

namespace zxopt {
namespace {

using testing::random_circuit;
using testing::RandomCircuitOptions;

void expect_exact_equal(const DenseMap& a, const DenseMap& b) {
  ASSERT_EQ(a.rows, b.rows);
  ASSERT_EQ(a.cols, b.cols);
  EXPECT_LT(a.max_abs_diff(b), 1e-9);
}

TEST(Translation, DiagramMatchesUnitaryExactly) {
  for (std::uint32_t seed = 0; seed < 30; ++seed) {
    Circuit c = random_circuit(seed, {3, 15, false, true});
    expect_exact_equal(circuit_unitary(c), to_tensor(circuit_to_diagram(c)));
  }
}

TEST(Simplify, CliffordSimpPreservesTensorExactly) {
  for (std::uint32_t seed = 0; seed < 40; ++seed) {
    Circuit c = random_circuit(seed, {3, 25, false, false});
    ZxDiagram d = circuit_to_diagram(c);
    clifford_simp(d);
    EXPECT_EQ(graph_like_violation(d), "") << "seed " << seed;
    expect_exact_equal(circuit_unitary(c), to_tensor(d));
  }
}

TEST(Simplify, GadgetSimpPreservesTensorExactly) {
  for (std::uint32_t seed = 0; seed < 40; ++seed) {
    Circuit c = random_circuit(seed, {4, 30, false, true});
    ZxDiagram d = circuit_to_diagram(c);
    gadget_simp(d);
    EXPECT_EQ(graph_like_violation(d), "") << "seed " << seed;
    expect_exact_equal(circuit_unitary(c), to_tensor(d));
  }
}

TEST(Simplify, TeleportKeepsSemantics) {
  for (std::uint32_t seed = 0; seed < 30; ++seed) {
    Circuit c = random_circuit(seed, {4, 30, false, true});
    Circuit t = phase_teleport(c);
    EXPECT_TRUE(equal_oracle(c, t)) << "seed " << seed;
  }
}

TEST(Simplify, TeleportMergesPhasesAcrossACancellingPair) {
  Circuit c;
  c.qubits = 2;
  c.add(Gate::zphase(0, Phase(1, 4)));
  c.add(Gate::cnot(0, 1));
  c.add(Gate::cnot(0, 1));
  c.add(Gate::zphase(0, Phase(1, 4)));
  Circuit t = phase_teleport(c);
  ASSERT_EQ(t.gates.size(), c.gates.size());
  EXPECT_EQ(stats(t).t_count, 0u);
  EXPECT_EQ(t.gates[0].phase + t.gates[3].phase, Phase::half_pi());
  EXPECT_TRUE(equal_oracle(c, t));
}

TEST(Simplify, TeleportKeepsTheSkeleton) {
  for (std::uint32_t seed = 0; seed < 30; ++seed) {
    Circuit c = decompose_ccz(random_circuit(seed, {4, 30, false, true}));
    Circuit t = phase_teleport(c);
    ASSERT_EQ(t.gates.size(), c.gates.size());
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
      EXPECT_EQ(t.gates[i].kind, c.gates[i].kind);
      EXPECT_EQ(t.gates[i].q, c.gates[i].q);
    }
    ZxDiagram d = circuit_to_diagram(c);
    gadget_simp(d);
    EXPECT_EQ(stats(t).t_count, d.non_clifford_count()) << seed;
  }
}

TEST(Simplify, StrategyNames) {
  EXPECT_EQ(strategy_from_string("gadget"), Strategy::Gadget);
  EXPECT_THROW(strategy_from_string("bogus"), Error);
}

TEST(Verify, EqualCircuitsReduceToWires) {
  for (std::uint32_t seed = 0; seed < 20; ++seed) {
    Circuit c = random_circuit(seed, {3, 20, true, false});
    Verdict v = verify_equality_rewrite(c, c);
    EXPECT_TRUE(v.equal) << "seed " << seed << ": " << v.reason;
    EXPECT_TRUE(check_certificate(c, c, v.certificate));
  }
}

TEST(Verify, InjectedTIsNeverEqual) {
  for (std::uint32_t seed = 0; seed < 20; ++seed) {
    Circuit c = random_circuit(seed, {3, 20, true, false});
    Circuit bad = c;
    bad.add(Gate::zphase(seed % 3, Phase(1, 4)));
    Verdict v = verify_equality_rewrite(c, bad);
    EXPECT_FALSE(v.equal) << seed;
    EXPECT_FALSE(v.reason.empty());
  }
}

}  // namespace
}  // namespace zxopt
