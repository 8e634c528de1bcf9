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

/*
 * C interface to the zxopt optimizer. Objects are opaque handles owned by the
 * caller and released with the matching _free function. Every call returns a
 * zxopt_status; on failure zxopt_last_error() describes the problem for the
 * calling thread. Strings returned through char** are freed with
 * zxopt_string_free.
 */
#ifndef ZXOPT_ZXOPT_H_
#define ZXOPT_ZXOPT_H_

#include <stddef.h>

#if defined(_WIN32)
#define ZXOPT_API __declspec(dllexport)
#else
#define ZXOPT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zxopt_status {
  ZXOPT_OK = 0,
  ZXOPT_ERR_INVALID_ARGUMENT = 1,
  ZXOPT_ERR_INVALID_VERTEX = 2,
  ZXOPT_ERR_PARSE = 3,
  ZXOPT_ERR_UNSUPPORTED_GATE = 4,
  ZXOPT_ERR_ARITY = 5,
  ZXOPT_ERR_FORM = 6,
  ZXOPT_ERR_NO_GFLOW = 7,
  ZXOPT_ERR_NOT_CLIFFORD = 8,
  ZXOPT_ERR_UNSUPPORTED_ANGLE = 9,
  ZXOPT_ERR_RESOURCE = 10,
  ZXOPT_ERR_INVALID_DECOMPOSITION = 11,
  ZXOPT_ERR_CONTRACT = 12,
  ZXOPT_ERR_IO = 13,
  ZXOPT_ERR_INTERNAL = 99
} zxopt_status;

typedef enum zxopt_strategy {
  ZXOPT_STRATEGY_CLIFFORD = 0,
  ZXOPT_STRATEGY_GADGET = 1,
  ZXOPT_STRATEGY_TELEPORT = 2
} zxopt_strategy;

typedef struct zxopt_circuit zxopt_circuit;
typedef struct zxopt_diagram zxopt_diagram;

ZXOPT_API const char* zxopt_version(void);
ZXOPT_API const char* zxopt_last_error(void);
ZXOPT_API const char* zxopt_status_name(zxopt_status status);
ZXOPT_API void zxopt_string_free(char* s);

/* Circuits. format is "qasm" or "qc"; load_file picks it from the extension. */
ZXOPT_API zxopt_status zxopt_circuit_parse(const char* text, const char* format, zxopt_circuit** out);
ZXOPT_API zxopt_status zxopt_circuit_load_file(const char* path, zxopt_circuit** out);
ZXOPT_API void zxopt_circuit_free(zxopt_circuit* c);
ZXOPT_API zxopt_status zxopt_circuit_qubits(const zxopt_circuit* c, size_t* out);
ZXOPT_API zxopt_status zxopt_circuit_gate_count(const zxopt_circuit* c, size_t* out);
ZXOPT_API zxopt_status zxopt_circuit_to_qasm(const zxopt_circuit* c, char** out);
ZXOPT_API zxopt_status zxopt_circuit_stats_json(const zxopt_circuit* c, char** out);

/* Diagrams. */
ZXOPT_API zxopt_status zxopt_circuit_to_diagram(const zxopt_circuit* c, zxopt_diagram** out);
ZXOPT_API zxopt_status zxopt_diagram_from_json(const char* json, zxopt_diagram** out);
ZXOPT_API zxopt_status zxopt_diagram_to_json(const zxopt_diagram* d, char** out);
ZXOPT_API void zxopt_diagram_free(zxopt_diagram* d);
ZXOPT_API zxopt_status zxopt_diagram_non_clifford_count(const zxopt_diagram* d, size_t* out);
ZXOPT_API zxopt_status zxopt_diagram_vertex_count(const zxopt_diagram* d, size_t* out);

/* Simplifies in place; ZXOPT_STRATEGY_TELEPORT is rejected (it works on circuits). */
ZXOPT_API zxopt_status zxopt_diagram_simplify(zxopt_diagram* d, zxopt_strategy strategy);
ZXOPT_API zxopt_status zxopt_extract(const zxopt_diagram* d, int column_heuristic, int lookahead_rows,
                                     zxopt_circuit** out);
/* Gadget or Clifford simplification followed by extraction, or phase teleportation. */
ZXOPT_API zxopt_status zxopt_optimize(const zxopt_circuit* c, zxopt_strategy strategy, zxopt_circuit** out);

/* *equal is 1 when the rewrite check proves equality, 0 when undecided. */
ZXOPT_API zxopt_status zxopt_verify(const zxopt_circuit* a, const zxopt_circuit* b, int* equal, char** reason);
/* Dense comparison up to global phase; small circuits only. */
ZXOPT_API zxopt_status zxopt_verify_oracle(const zxopt_circuit* a, const zxopt_circuit* b, int* equal);

/* <bra|C|ket>, bit strings list qubit 0 first. */
ZXOPT_API zxopt_status zxopt_clifford_amplitude(const zxopt_circuit* c, const char* bra, const char* ket,
                                                double* re, double* im);
/* strategy is "single" or "paired"; terms and t_after may be NULL. */
ZXOPT_API zxopt_status zxopt_stabdecomp_amplitude(const zxopt_circuit* c, const char* bra, const char* ket,
                                                  const char* strategy, double* re, double* im,
                                                  size_t* terms, size_t* t_after);

#ifdef __cplusplus
}
#endif

#endif  // ZXOPT_ZXOPT_H_
