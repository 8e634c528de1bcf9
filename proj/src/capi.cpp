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

#include "zxopt/zxopt.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "zxopt/error.hpp"
#include "zxopt/extract.hpp"
#include "zxopt/simplify.hpp"
#include "zxopt/simulate.hpp"
#include "zxopt/verify.hpp"

struct zxopt_circuit {
  zxopt::Circuit c;
};

struct zxopt_diagram {
  zxopt::ZxDiagram d;
};

namespace {

thread_local std::string g_last_error;

zxopt_status status_of(zxopt::ErrorKind k) { return static_cast<zxopt_status>(static_cast<int>(k) + 1); }

template <class F>
zxopt_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return ZXOPT_OK;
  } catch (const zxopt::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return ZXOPT_ERR_RESOURCE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ZXOPT_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw zxopt::Error(zxopt::ErrorKind::InvalidArgument, std::string(what) + " is null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* zxopt_version(void) { return "0.1.0"; }

const char* zxopt_last_error(void) { return g_last_error.c_str(); }

const char* zxopt_status_name(zxopt_status status) {
  switch (status) {
    case ZXOPT_OK: return "ok";
    case ZXOPT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ZXOPT_ERR_INVALID_VERTEX: return "invalid vertex";
    case ZXOPT_ERR_PARSE: return "parse error";
    case ZXOPT_ERR_UNSUPPORTED_GATE: return "unsupported gate";
    case ZXOPT_ERR_ARITY: return "arity error";
    case ZXOPT_ERR_FORM: return "form error";
    case ZXOPT_ERR_NO_GFLOW: return "no gflow";
    case ZXOPT_ERR_NOT_CLIFFORD: return "not Clifford";
    case ZXOPT_ERR_UNSUPPORTED_ANGLE: return "unsupported angle";
    case ZXOPT_ERR_RESOURCE: return "resource limit";
    case ZXOPT_ERR_INVALID_DECOMPOSITION: return "invalid decomposition";
    case ZXOPT_ERR_CONTRACT: return "contract violation";
    case ZXOPT_ERR_IO: return "i/o error";
    case ZXOPT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void zxopt_string_free(char* s) { std::free(s); }

zxopt_status zxopt_circuit_parse(const char* text, const char* format, zxopt_circuit** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    std::string fmt = format ? format : "qasm";
    zxopt::Circuit c;
    if (fmt == "qasm") {
      c = zxopt::parse_qasm(text);
    } else if (fmt == "qc") {
      c = zxopt::parse_qc(text);
    } else {
      throw zxopt::Error(zxopt::ErrorKind::InvalidArgument, "unknown circuit format '" + fmt + "'");
    }
    *out = new zxopt_circuit{std::move(c)};
  });
}

zxopt_status zxopt_circuit_load_file(const char* path, zxopt_circuit** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new zxopt_circuit{zxopt::load_circuit_file(path)};
  });
}

void zxopt_circuit_free(zxopt_circuit* c) { delete c; }

zxopt_status zxopt_circuit_qubits(const zxopt_circuit* c, size_t* out) {
  return guarded([&] {
    need(c, "circuit");
    need(out, "out");
    *out = c->c.qubits;
  });
}

zxopt_status zxopt_circuit_gate_count(const zxopt_circuit* c, size_t* out) {
  return guarded([&] {
    need(c, "circuit");
    need(out, "out");
    *out = c->c.gates.size();
  });
}

zxopt_status zxopt_circuit_to_qasm(const zxopt_circuit* c, char** out) {
  return guarded([&] {
    need(c, "circuit");
    need(out, "out");
    *out = dup_string(zxopt::emit_qasm(c->c));
  });
}

zxopt_status zxopt_circuit_stats_json(const zxopt_circuit* c, char** out) {
  return guarded([&] {
    need(c, "circuit");
    need(out, "out");
    *out = dup_string(zxopt::stats_json(zxopt::stats(c->c)));
  });
}

zxopt_status zxopt_circuit_to_diagram(const zxopt_circuit* c, zxopt_diagram** out) {
  return guarded([&] {
    need(c, "circuit");
    need(out, "out");
    *out = new zxopt_diagram{zxopt::circuit_to_diagram(c->c)};
  });
}

zxopt_status zxopt_diagram_from_json(const char* json, zxopt_diagram** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = new zxopt_diagram{zxopt::diagram_from_json(json)};
  });
}

zxopt_status zxopt_diagram_to_json(const zxopt_diagram* d, char** out) {
  return guarded([&] {
    need(d, "diagram");
    need(out, "out");
    *out = dup_string(zxopt::diagram_to_json(d->d));
  });
}

void zxopt_diagram_free(zxopt_diagram* d) { delete d; }

zxopt_status zxopt_diagram_non_clifford_count(const zxopt_diagram* d, size_t* out) {
  return guarded([&] {
    need(d, "diagram");
    need(out, "out");
    *out = d->d.non_clifford_count();
  });
}

zxopt_status zxopt_diagram_vertex_count(const zxopt_diagram* d, size_t* out) {
  return guarded([&] {
    need(d, "diagram");
    need(out, "out");
    *out = d->d.num_vertices();
  });
}

zxopt_status zxopt_diagram_simplify(zxopt_diagram* d, zxopt_strategy strategy) {
  return guarded([&] {
    need(d, "diagram");
    switch (strategy) {
      case ZXOPT_STRATEGY_CLIFFORD: zxopt::clifford_simp(d->d); break;
      case ZXOPT_STRATEGY_GADGET: zxopt::gadget_simp(d->d); break;
      default:
        throw zxopt::Error(zxopt::ErrorKind::InvalidArgument, "teleportation works on circuits, not diagrams");
    }
  });
}

zxopt_status zxopt_extract(const zxopt_diagram* d, int column_heuristic, int lookahead_rows,
                           zxopt_circuit** out) {
  return guarded([&] {
    need(d, "diagram");
    need(out, "out");
    zxopt::ExtractOptions opts;
    opts.column_heuristic = column_heuristic != 0;
    opts.lookahead_rows = lookahead_rows;
    *out = new zxopt_circuit{zxopt::extract_circuit(d->d, opts)};
  });
}

zxopt_status zxopt_optimize(const zxopt_circuit* c, zxopt_strategy strategy, zxopt_circuit** out) {
  return guarded([&] {
    need(c, "circuit");
    need(out, "out");
    zxopt::Circuit result;
    if (strategy == ZXOPT_STRATEGY_TELEPORT) {
      result = zxopt::phase_teleport(c->c);
    } else {
      zxopt::ZxDiagram d = zxopt::circuit_to_diagram(c->c);
      if (strategy == ZXOPT_STRATEGY_CLIFFORD) {
        zxopt::clifford_simp(d);
      } else if (strategy == ZXOPT_STRATEGY_GADGET) {
        zxopt::gadget_simp(d);
      } else {
        throw zxopt::Error(zxopt::ErrorKind::InvalidArgument, "unknown strategy");
      }
      result = zxopt::extract_circuit(d);
    }
    result.name = c->c.name;
    *out = new zxopt_circuit{std::move(result)};
  });
}

zxopt_status zxopt_verify(const zxopt_circuit* a, const zxopt_circuit* b, int* equal, char** reason) {
  return guarded([&] {
    need(a, "first circuit");
    need(b, "second circuit");
    need(equal, "equal");
    zxopt::Verdict v = zxopt::verify_equality_rewrite(a->c, b->c);
    *equal = v.equal ? 1 : 0;
    if (reason) *reason = dup_string(v.reason);
  });
}

zxopt_status zxopt_verify_oracle(const zxopt_circuit* a, const zxopt_circuit* b, int* equal) {
  return guarded([&] {
    need(a, "first circuit");
    need(b, "second circuit");
    need(equal, "equal");
    if (a->c.qubits > zxopt::kOracleQubitLimit || b->c.qubits > zxopt::kOracleQubitLimit) {
      throw zxopt::Error(zxopt::ErrorKind::Resource, "too many qubits for the dense oracle");
    }
    *equal = zxopt::equal_oracle(a->c, b->c) ? 1 : 0;
  });
}

zxopt_status zxopt_clifford_amplitude(const zxopt_circuit* c, const char* bra, const char* ket, double* re,
                                      double* im) {
  return guarded([&] {
    need(c, "circuit");
    need(bra, "bra");
    need(ket, "ket");
    need(re, "re");
    need(im, "im");
    std::complex<double> a = zxopt::clifford_amplitude(c->c, ket, bra);
    *re = a.real();
    *im = a.imag();
  });
}

zxopt_status zxopt_stabdecomp_amplitude(const zxopt_circuit* c, const char* bra, const char* ket,
                                        const char* strategy, double* re, double* im, size_t* terms,
                                        size_t* t_after) {
  return guarded([&] {
    need(c, "circuit");
    need(bra, "bra");
    need(ket, "ket");
    need(re, "re");
    need(im, "im");
    const auto& s = zxopt::decomposition_by_name(strategy ? strategy : "paired");
    zxopt::AmplitudeResult r = zxopt::stab_decomp_amplitude(c->c, ket, bra, s);
    *re = r.amplitude.real();
    *im = r.amplitude.imag();
    if (terms) *terms = r.terms;
    if (t_after) *t_after = r.t_count_after_simp;
  });
}

}  // extern "C"
