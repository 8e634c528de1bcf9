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

#include <random>

#include "test_support.hpp"
#include "zxopt/error.hpp"
#include "zxopt/extract.hpp"
#include "zxopt/mat2.hpp"
#include "zxopt/rules.hpp"
#include "zxopt/simplify.hpp"

namespace zxopt {
namespace {

Mat2 random_mat2(std::mt19937& rng, std::size_t r, std::size_t c) {
  Mat2 m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng() % 2);
  }
  return m;
}

bool is_rref(const Mat2& m) {
  std::size_t lead = 0;
  bool zero_rows = false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::size_t c = 0;
    while (c < m.cols() && !m.at(r, c)) ++c;
    if (c == m.cols()) {
      zero_rows = true;
      continue;
    }
    if (zero_rows || (r > 0 && c < lead)) return false;
    for (std::size_t o = 0; o < m.rows(); ++o) {
      if (o != r && m.at(o, c)) return false;
    }
    lead = c + 1;
  }
  return true;
}

TEST(Mat2, WorkedExample) {
  Mat2 m = Mat2::from_strings({"11000", "00110", "01110", "11011"});
  GaussResult r = gauss_reduce(m);
  EXPECT_EQ(r.matrix, Mat2::from_strings({"10000", "01000", "00101", "00011"}));
  Mat2 replay = m;
  apply_row_ops(replay, r.ops);
  EXPECT_EQ(replay, r.matrix);
}

TEST(Mat2, IdentityNeedsNoOps) {
  GaussResult r = gauss_reduce(Mat2::identity(5));
  EXPECT_EQ(r.matrix, Mat2::identity(5));
  EXPECT_TRUE(r.ops.empty());
}

TEST(Mat2, ReplayReproducesEveryMode) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Mat2 m = random_mat2(rng, 1 + rng() % 7, 1 + rng() % 7);
    for (GaussMode mode : {GaussMode::FullRref, GaussMode::EarlyStop}) {
      for (bool heuristic : {false, true}) {
        GaussResult r = gauss_reduce(m, {mode, heuristic});
        Mat2 replay = m;
        apply_row_ops(replay, r.ops);
        EXPECT_EQ(replay, r.matrix);
        if (mode == GaussMode::FullRref && !heuristic) EXPECT_TRUE(is_rref(r.matrix)) << m;
      }
    }
  }
}

TEST(Mat2, EarlyStopFindsASingleOneAndIsNoLonger) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    Mat2 m = random_mat2(rng, 2 + rng() % 5, 2 + rng() % 5);
    GaussResult full = gauss_reduce(m);
    GaussResult early = gauss_reduce(m, {GaussMode::EarlyStop, false});
    EXPECT_LE(early.ops.size(), full.ops.size());
    bool full_single = false, early_single = false;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      full_single = full_single || full.matrix.single_one(r);
      early_single = early_single || early.matrix.single_one(r);
    }
    EXPECT_EQ(full_single, early_single) << m;
  }
}

TEST(Mat2, BiadjacencyRowSumCertifiesExtraction) {
  Mat2 m = Mat2::from_strings({"1100", "0011", "0111"});
  for (std::size_t r = 0; r < 3; ++r) EXPECT_FALSE(m.single_one(r));
  m.row_add(1, 2);
  EXPECT_EQ(m.single_one(2), 1u);
}

TEST(Mat2, SolveGf2) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    Mat2 a = random_mat2(rng, 4, 5);
    std::vector<std::uint8_t> x(5);
    for (auto& b : x) b = rng() % 2;
    std::vector<std::uint8_t> rhs(4, 0);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 5; ++j) rhs[i] ^= a.at(i, j) & x[j];
    }
    auto sol = solve_gf2(a, rhs);
    ASSERT_TRUE(sol);
    for (std::size_t i = 0; i < 4; ++i) {
      std::uint8_t v = 0;
      for (std::size_t j = 0; j < 5; ++j) v ^= a.at(i, j) & (*sol)[j];
      EXPECT_EQ(v, rhs[i]);
    }
  }
  EXPECT_FALSE(solve_gf2(Mat2::from_strings({"11", "11"}), {1, 0}));
}

TEST(Extract, RecoversTheUnitary) {
  for (std::uint32_t seed = 0; seed < 80; ++seed) {
    Circuit c = testing::random_circuit(seed, {2 + seed % 5, 10 + seed % 31, false, false});
    ZxDiagram d = circuit_to_diagram(c);
    gadget_simp(d);
    ExtractOptions o;
    o.column_heuristic = seed % 2;
    o.lookahead_rows = static_cast<int>(seed % 4);
    o.early_stop = seed % 3 != 0;
    Circuit e = extract_circuit(d, o);
    EXPECT_TRUE(equal_oracle(c, e)) << "seed " << seed;
    EXPECT_EQ(stats(e).t_count, d.non_clifford_count()) << "seed " << seed;
  }
}

TEST(Extract, IdentityAndPermutation) {
  Circuit id;
  id.qubits = 3;
  EXPECT_TRUE(extract_circuit(circuit_to_diagram(id)).gates.empty());
  Circuit sw = id;
  sw.add(Gate::swap(0, 2));
  Circuit e = extract_circuit(circuit_to_diagram(sw));
  for (const Gate& g : e.gates) EXPECT_EQ(g.kind, GateKind::SWAP);
  EXPECT_TRUE(equal_oracle(sw, e));
}

TEST(Extract, SingularMapHasNoGflow) {
  ZxDiagram d;
  std::vector<Vertex> ins, outs, left, right;
  for (int q = 0; q < 2; ++q) {
    ins.push_back(d.add_vertex(VertexKind::Boundary));
    outs.push_back(d.add_vertex(VertexKind::Boundary));
    left.push_back(d.add_vertex(VertexKind::Z));
    right.push_back(d.add_vertex(VertexKind::Z));
    d.add_edge(ins[q], left[q], EdgeKind::Simple);
    d.add_edge(right[q], outs[q], EdgeKind::Simple);
  }
  for (Vertex a : left) {
    for (Vertex b : right) d.add_edge(a, b, EdgeKind::Hadamard);
  }
  d.set_inputs(ins);
  d.set_outputs(outs);
  try {
    extract_circuit(d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoGflow);
  }
}

TEST(Extract, RejectsBadLookahead) {
  Circuit id;
  id.qubits = 1;
  ExtractOptions o;
  o.lookahead_rows = kMaxLookaheadRows + 1;
  EXPECT_THROW(extract_circuit(circuit_to_diagram(id), o), Error);
}

TEST(CliffordNormalForm, RandomCircuits) {
  for (std::uint32_t seed = 0; seed < 40; ++seed) {
    Circuit c = testing::random_circuit(seed, {1 + seed % 6, 40, true, false});
    ZxDiagram d = circuit_to_diagram(c);
    LayeredClifford l = extract_clifford_normal_form(d);
    EXPECT_TRUE(equal_oracle(c, l.circuit)) << seed;
    EXPECT_TRUE(has_clifford_layer_shape(l.circuit)) << seed;
    std::size_t total = 0;
    for (std::size_t s : l.layer_sizes) total += s;
    EXPECT_EQ(total, l.circuit.gates.size());
    clifford_simp(d);
    for (Vertex v : d.vertices()) {
      if (d.is_spider(v)) EXPECT_FALSE(is_internal(d, v)) << seed;
    }
  }
}

TEST(CliffordNormalForm, TrivialCases) {
  Circuit c;
  c.qubits = 3;
  LayeredClifford id = extract_clifford_normal_form(circuit_to_diagram(c));
  EXPECT_EQ(id.layer_sizes, (std::array<std::size_t, 6>{0, 0, 0, 0, 0, 0}));
  c.add(Gate::cz(0, 2));
  LayeredClifford cz = extract_clifford_normal_form(circuit_to_diagram(c));
  EXPECT_EQ(cz.layer_sizes, (std::array<std::size_t, 6>{0, 1, 0, 0, 0, 0}));
  EXPECT_EQ(cz.circuit.gates.at(0).kind, GateKind::CZ);
  c.add(Gate::zphase(1, Phase(1, 4)));
  try {
    extract_clifford_normal_form(circuit_to_diagram(c));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotClifford);
  }
}

TEST(CliffordNormalForm, LayerShapeRecognizer) {
  Circuit c;
  c.qubits = 2;
  c.add(Gate::h(0));
  c.add(Gate::cz(0, 1));
  c.add(Gate::cnot(1, 0));
  c.add(Gate::h(1));
  c.add(Gate::cz(0, 1));
  c.add(Gate::zphase(1, Phase::half_pi()));
  EXPECT_TRUE(has_clifford_layer_shape(c));
  c.add(Gate::cnot(0, 1));
  EXPECT_FALSE(has_clifford_layer_shape(c));
}

}  // namespace
}  // namespace zxopt
