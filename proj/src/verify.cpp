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

#include <cmath>

#include "zxopt/error.hpp"
#include "zxopt/rules.hpp"
#include "zxopt/simplify.hpp"
#include "zxopt/verify.hpp"

namespace zxopt {

namespace {

ZxDiagram miter(const Circuit& c1, const Circuit& c2) {
  if (c1.qubits != c2.qubits) {
    throw Error(ErrorKind::InvalidArgument, "circuits act on different numbers of qubits");
  }
  return compose(circuit_to_diagram(c1), circuit_to_diagram(adjoint_circuit(c2)));
}

bool finish_and_check(ZxDiagram& d, std::string* why) {
  fold_scalar_components(d, false);
  return is_bare_identity(d, why);
}

}  // namespace

bool is_bare_identity(const ZxDiagram& d, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (d.inputs().size() != d.outputs().size()) return fail("boundary counts differ");
  std::size_t visited = 0;
  for (std::size_t i = 0; i < d.inputs().size(); ++i) {
    Vertex prev = d.inputs()[i];
    ++visited;
    if (d.degree(prev) != 1) return fail("input " + std::to_string(i) + " is not a wire end");
    Vertex cur = d.neighbor_list(prev).front();
    EdgeKind acc = *d.edge_kind(prev, cur);
    while (!d.is_boundary(cur)) {
      ++visited;
      if (d.degree(cur) != 2 || !d.phase(cur).is_zero()) {
        return fail("wire " + std::to_string(i) + " passes through a non-identity spider");
      }
      auto nb = d.neighbor_list(cur);
      Vertex next = nb[0] == prev ? nb[1] : nb[0];
      acc = compose_kind(acc, *d.edge_kind(cur, next));
      prev = cur;
      cur = next;
    }
    ++visited;
    if (cur != d.outputs()[i]) return fail("input " + std::to_string(i) + " reaches another output");
    if (acc != EdgeKind::Simple) return fail("wire " + std::to_string(i) + " carries a Hadamard");
  }
  if (visited != d.num_vertices()) return fail("residual spiders remain");
  if (d.scalar().is_zero || std::abs(d.scalar().value()) < 1e-12) return fail("scalar vanished");
  return true;
}

Verdict verify_equality_rewrite(const Circuit& c1, const Circuit& c2) {
  Verdict out;
  ZxDiagram d = miter(c1, c2);
  d.attach_trace(&out.certificate);
  gadget_simp(d);
  out.equal = finish_and_check(d, &out.reason);
  d.attach_trace(nullptr);
  if (out.equal) out.reason = "reduced to bare wires";
  return out;
}

bool check_certificate(const Circuit& c1, const Circuit& c2, const RewriteTrace& cert) {
  ZxDiagram d = miter(c1, c2);
  try {
    replay_trace(d, cert);
  } catch (const Error&) {
    return false;
  }
  return is_bare_identity(d, nullptr);
}

}  // namespace zxopt
