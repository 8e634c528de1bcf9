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

#include <json.hpp>

#include "test_support.hpp"
#include "zxopt/error.hpp"

namespace zxopt {
namespace {

ErrorKind parse_error_kind(const std::string& text, bool qc) {
  try {
    qc ? parse_qc(text) : parse_qasm(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return ErrorKind::Contract;
}

TEST(Qasm, ParsesTheGateSet) {
  Circuit c = parse_qasm(
      "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\nqreg r[1];\n"
      "h q[0]; x q[1]; z r[0]; s q[0]; sdg q[0]; t q[1]; tdg q[1];\n"
      "rz(3*pi/4) q[0]; rx(-pi/2) r[0];\n"
      "cx q[0],q[1]; cz q[1],r[0]; swap q[0],r[0]; ccx q[0],q[1],r[0]; ccz q[0],q[1],r[0];\n");
  EXPECT_EQ(c.qubits, 3u);
  ASSERT_EQ(c.gates.size(), 14u);
  EXPECT_EQ(c.gates[1], Gate::xphase(1, Phase::pi()));
  EXPECT_EQ(c.gates[2], Gate::zphase(2, Phase::pi()));
  EXPECT_EQ(c.gates[6], Gate::zphase(1, Phase(7, 4)));
  EXPECT_EQ(c.gates[7], Gate::zphase(0, Phase(3, 4)));
  EXPECT_EQ(c.gates[8], Gate::xphase(2, Phase(3, 2)));
  EXPECT_EQ(c.gates[9], Gate::cnot(0, 1));
  EXPECT_EQ(c.gates[12], Gate::ccx(0, 1, 2));
}

TEST(Qasm, EmitRoundTrips) {
  for (std::uint32_t seed = 0; seed < 40; ++seed) {
    Circuit c = testing::random_circuit(seed, {4, 25, false, true});
    Circuit back = parse_qasm(emit_qasm(c));
    EXPECT_EQ(back, c) << emit_qasm(c);
  }
}

TEST(Qasm, Errors) {
  const std::string head = "OPENQASM 2.0;\nqreg q[2];\n";
  EXPECT_EQ(parse_error_kind(head + "foo q[0];\n", false), ErrorKind::Parse);
  EXPECT_EQ(parse_error_kind(head + "cx q[0];\n", false), ErrorKind::Parse);
  EXPECT_EQ(parse_error_kind(head + "cx q[0],q[0];\n", false), ErrorKind::Parse);
  EXPECT_EQ(parse_error_kind(head + "rz(pi/0) q[0];\n", false), ErrorKind::Parse);
  EXPECT_EQ(parse_error_kind(head + "rz(pi/3 q[0];\n", false), ErrorKind::Parse);
  EXPECT_EQ(parse_error_kind(head + "h q[5];\n", false), ErrorKind::Parse);
  EXPECT_EQ(parse_error_kind("OPENQASM 3.0;\nqreg q[1];\n", false), ErrorKind::Parse);
  EXPECT_EQ(parse_error_kind(head + "rz(0.3) q[0];\n", false), ErrorKind::Parse);
}

TEST(Qc, ParsesTofAndAncillaWires) {
  Circuit c = parse_qc(".v a b c t x\n.i a b c t\n.o a b c t\nBEGIN\ntof a b x\nT c\nT* c\nH t\nZ a b c\nEND\n");
  EXPECT_EQ(c.qubits, 5u);
  ASSERT_EQ(c.gates.size(), 5u);
  EXPECT_EQ(c.gates[0], Gate::ccx(0, 1, 4));
  EXPECT_EQ(c.gates[1], Gate::zphase(2, Phase(1, 4)));
  EXPECT_EQ(c.gates[2], Gate::zphase(2, Phase(7, 4)));
  EXPECT_EQ(c.gates[4], Gate::ccz(0, 1, 2));
}

TEST(Qc, Errors) {
  EXPECT_EQ(parse_error_kind(".v a b\nBEGIN\nfoo a\nEND\n", true), ErrorKind::Parse);
  EXPECT_EQ(parse_error_kind(".v a b\nBEGIN\ntof a b\n", true), ErrorKind::Parse);
  EXPECT_EQ(parse_error_kind(".v a b\ntof a b\nEND\n", true), ErrorKind::Parse);
  EXPECT_EQ(parse_error_kind(".v a b c d\nBEGIN\ntof a b c d\nEND\n", true), ErrorKind::UnsupportedGate);
  EXPECT_EQ(parse_error_kind(".v a b\nBEGIN\ntof a a\nEND\n", true), ErrorKind::Parse);
}

TEST(Circuit, DecomposedToffoliHasTheSameUnitary) {
  for (auto g : {Gate::ccz(0, 1, 2), Gate::ccx(0, 1, 2), Gate::ccx(2, 0, 1), Gate::ccz(1, 2, 0)}) {
    Circuit c;
    c.qubits = 3;
    c.add(g);
    Circuit d = decompose_ccz(c);
    EXPECT_EQ(stats(d).t_count, 7u);
    EXPECT_LT(circuit_unitary(c).max_abs_diff(circuit_unitary(d)), 1e-12);
  }
}

TEST(Circuit, AdjointInvertsTheUnitary) {
  Circuit c = testing::random_circuit(7, {3, 30, false, true});
  DenseMap u = circuit_unitary(c);
  DenseMap prod = circuit_unitary(adjoint_circuit(c)) * u;
  DenseMap id(8, 8);
  for (std::size_t i = 0; i < 8; ++i) id.at(i, i) = 1.0;
  EXPECT_LT(prod.max_abs_diff(id), 1e-12);
}

TEST(Circuit, AddValidatesQubits) {
  Circuit c;
  c.qubits = 2;
  EXPECT_THROW(c.add(Gate::h(2)), Error);
  EXPECT_THROW(c.add(Gate::cnot(1, 1)), Error);
}

TEST(Circuit, Stats) {
  Circuit c;
  c.qubits = 3;
  c.add(Gate::zphase(0, Phase(1, 4)));
  c.add(Gate::zphase(1, Phase(1, 2)));
  c.add(Gate::cnot(0, 1));
  c.add(Gate::ccx(0, 1, 2));
  c.add(Gate::h(2));
  Stats s = stats(c);
  EXPECT_EQ(s.t_count, 8u);
  EXPECT_EQ(s.two_qubit_count, 1u);
  EXPECT_EQ(s.depth, 4u);
  auto j = nlohmann::json::parse(stats_json(s));
  EXPECT_EQ(j["tcount"], 8);
  EXPECT_EQ(j["gates"], 5);
}

TEST(Circuit, BenchmarksLoad) {
  for (auto [name, tcount] : {std::pair{"tof_3", 21u}, std::pair{"tof_4", 35u},
                              std::pair{"barenco_tof_3", 28u}, std::pair{"vbe_adder_3", 70u}}) {
    Circuit c = load_circuit_file(std::string(ZXOPT_SOURCE_DIR) + "/benchmarks/" + name + ".qc");
    EXPECT_EQ(stats(c).t_count, tcount) << name;
  }
  try {
    load_circuit_file("/nonexistent/file.qc");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Io);
  }
}

}  // namespace
}  // namespace zxopt
