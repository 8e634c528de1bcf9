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

// Command-line front end. Talks to the optimizer only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zxopt/zxopt.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

struct Failure {
  zxopt_status status;
  std::string message;
};

void check(zxopt_status s) {
  if (s != ZXOPT_OK) throw Failure{s, zxopt_last_error()};
}

struct CircuitDeleter {
  void operator()(zxopt_circuit* c) const { zxopt_circuit_free(c); }
};
struct DiagramDeleter {
  void operator()(zxopt_diagram* d) const { zxopt_diagram_free(d); }
};
using CircuitPtr = std::unique_ptr<zxopt_circuit, CircuitDeleter>;
using DiagramPtr = std::unique_ptr<zxopt_diagram, DiagramDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  zxopt_string_free(s);
  return out;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{ZXOPT_ERR_IO, "cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{ZXOPT_ERR_IO, "cannot write '" + path + "'"};
}

std::string detect_format(const std::string& path, const std::string& forced) {
  if (!forced.empty()) return forced;
  if (ends_with(path, ".zx.json") || ends_with(path, ".json")) return "zx-json";
  if (ends_with(path, ".qc") || ends_with(path, ".tfc")) return "qc";
  return "qasm";
}

CircuitPtr load_circuit(const std::string& path, const std::string& forced_format) {
  std::string fmt = detect_format(path, forced_format);
  if (fmt == "zx-json") throw Failure{ZXOPT_ERR_INVALID_ARGUMENT, "expected a circuit, got a diagram file"};
  std::string text = read_file(path);
  zxopt_circuit* c = nullptr;
  check(zxopt_circuit_parse(text.c_str(), fmt.c_str(), &c));
  return CircuitPtr(c);
}

std::string qasm_of(const zxopt_circuit* c) {
  char* s = nullptr;
  check(zxopt_circuit_to_qasm(c, &s));
  return take(s);
}

nlohmann::json stats_of(const zxopt_circuit* c) {
  char* s = nullptr;
  check(zxopt_circuit_stats_json(c, &s));
  return nlohmann::json::parse(take(s));
}

zxopt_strategy strategy_of(const std::string& name) {
  if (name == "clifford") return ZXOPT_STRATEGY_CLIFFORD;
  if (name == "gadget") return ZXOPT_STRATEGY_GADGET;
  return ZXOPT_STRATEGY_TELEPORT;
}

std::string random_qasm(std::mt19937& rng, std::size_t qubits, std::size_t gates) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << qubits << "];\n";
  std::uniform_int_distribution<std::size_t> pick_qubit(0, qubits - 1);
  std::uniform_int_distribution<int> pick_gate(0, qubits > 1 ? 5 : 3);
  static const char* one_qubit[] = {"h", "s", "t", "tdg"};
  for (std::size_t i = 0; i < gates; ++i) {
    int g = pick_gate(rng);
    std::size_t a = pick_qubit(rng);
    if (g < 4) {
      os << one_qubit[g] << " q[" << a << "];\n";
      continue;
    }
    std::size_t b = pick_qubit(rng);
    while (b == a) b = pick_qubit(rng);
    os << (g == 4 ? "cx" : "cz") << " q[" << a << "],q[" << b << "];\n";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zxopt: ZX-calculus circuit optimizer"};
  app.require_subcommand(1);

  std::string in_path, out_path, format, strategy = "gadget";
  bool want_stats = false;
  auto* optimize = app.add_subcommand("optimize", "Simplify a circuit and write the result");
  optimize->add_option("--strategy", strategy, "Simplification strategy")
      ->check(CLI::IsMember({"clifford", "gadget", "teleport"}));
  optimize->add_option("--in", in_path, "Input circuit")->required();
  optimize->add_option("--out", out_path, "Output file (.qasm, or .zx.json for the simplified diagram)")
      ->required();
  optimize->add_option("--format", format, "Input format")->check(CLI::IsMember({"qasm", "qc"}));
  optimize->add_flag("--stats", want_stats, "Print input and output statistics as JSON");

  bool column_heuristic = false;
  int lookahead = 1;
  auto* extract = app.add_subcommand("extract", "Extract a circuit from a diagram JSON file");
  extract->add_option("--in", in_path, "Input diagram (.zx.json)")->required();
  extract->add_option("--out", out_path, "Output QASM file")->required();
  extract->add_flag("--column-heuristic", column_heuristic, "Greedy column order during elimination");
  extract->add_option("--lookahead", lookahead, "Rows combined when searching for extractable vertices")
      ->check(CLI::Range(0, 3));

  std::string first, second;
  bool use_oracle = false;
  auto* verify = app.add_subcommand("verify", "Check two circuits for equality by rewriting");
  verify->add_option("a", first, "First circuit")->required();
  verify->add_option("b", second, "Second circuit")->required();
  verify->add_option("--format", format, "Input format")->check(CLI::IsMember({"qasm", "qc"}));
  verify->add_flag("--oracle", use_oracle, "Also compare dense unitaries (at most 10 qubits)");

  bool clifford = false;
  std::string stabdecomp, bra, ket;
  auto* sim = app.add_subcommand("sim", "Compute the amplitude <bra|C|ket>");
  auto* cliff_flag = sim->add_flag("--clifford", clifford, "Clifford reduction");
  auto* stab_opt = sim->add_option("--stabdecomp", stabdecomp, "Magic-state decomposition")
                       ->check(CLI::IsMember({"single", "paired"}));
  cliff_flag->excludes(stab_opt);
  sim->add_option("--in", in_path, "Input circuit")->required();
  sim->add_option("--bra", bra, "Output bits, qubit 0 first")->required();
  sim->add_option("--ket", ket, "Input bits, qubit 0 first")->required();
  sim->add_option("--format", format, "Input format")->check(CLI::IsMember({"qasm", "qc"}));

  auto* stats = app.add_subcommand("stats", "Print circuit statistics as JSON");
  stats->add_option("--in", in_path, "Input circuit")->required();
  stats->add_option("--format", format, "Input format")->check(CLI::IsMember({"qasm", "qc"}));

  unsigned seed = 1;
  std::size_t count = 20;
  auto* selftest = app.add_subcommand("selftest", "Optimize random circuits and compare against dense unitaries");
  selftest->add_option("--seed", seed, "Random seed");
  selftest->add_option("--count", count, "Number of circuits")->check(CLI::Range(1, 10000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*optimize) {
      CircuitPtr c = load_circuit(in_path, format);
      if (ends_with(out_path, ".zx.json")) {
        if (strategy == "teleport") throw Failure{ZXOPT_ERR_INVALID_ARGUMENT, "teleport produces circuits only"};
        zxopt_diagram* raw = nullptr;
        check(zxopt_circuit_to_diagram(c.get(), &raw));
        DiagramPtr d(raw);
        check(zxopt_diagram_simplify(d.get(), strategy_of(strategy)));
        char* json = nullptr;
        check(zxopt_diagram_to_json(d.get(), &json));
        write_file(out_path, take(json) + "\n");
        if (want_stats) {
          std::size_t nc = 0;
          check(zxopt_diagram_non_clifford_count(d.get(), &nc));
          std::cout << nlohmann::json{{"input", stats_of(c.get())}, {"tcount", nc}}.dump() << "\n";
        }
        return kExitOk;
      }
      zxopt_circuit* raw = nullptr;
      check(zxopt_optimize(c.get(), strategy_of(strategy), &raw));
      CircuitPtr out(raw);
      write_file(out_path, qasm_of(out.get()));
      if (want_stats) {
        nlohmann::json s = stats_of(out.get());
        std::cout << nlohmann::json{{"input", stats_of(c.get())}, {"output", s}, {"tcount", s["tcount"]}}.dump()
                  << "\n";
      }
      return kExitOk;
    }
    if (*extract) {
      std::string text = read_file(in_path);
      zxopt_diagram* raw = nullptr;
      check(zxopt_diagram_from_json(text.c_str(), &raw));
      DiagramPtr d(raw);
      zxopt_circuit* craw = nullptr;
      check(zxopt_extract(d.get(), column_heuristic ? 1 : 0, lookahead, &craw));
      CircuitPtr out(craw);
      write_file(out_path, qasm_of(out.get()));
      return kExitOk;
    }
    if (*verify) {
      CircuitPtr a = load_circuit(first, format);
      CircuitPtr b = load_circuit(second, format);
      int equal = 0;
      char* reason = nullptr;
      check(zxopt_verify(a.get(), b.get(), &equal, &reason));
      nlohmann::json j{{"verdict", equal ? "equal" : "unknown"}, {"reason", take(reason)}};
      if (use_oracle) {
        int same = 0;
        check(zxopt_verify_oracle(a.get(), b.get(), &same));
        j["oracle_equal"] = same != 0;
      }
      std::cout << j.dump() << "\n";
      return equal ? kExitOk : kExitUnknown;
    }
    if (*sim) {
      if (!clifford && stabdecomp.empty()) {
        std::cerr << "sim needs --clifford or --stabdecomp\n" << sim->help();
        return kExitUsage;
      }
      CircuitPtr c = load_circuit(in_path, format);
      double re = 0, im = 0;
      std::size_t terms = 1, t_after = 0;
      if (clifford) {
        check(zxopt_clifford_amplitude(c.get(), bra.c_str(), ket.c_str(), &re, &im));
      } else {
        check(zxopt_stabdecomp_amplitude(c.get(), bra.c_str(), ket.c_str(), stabdecomp.c_str(), &re, &im, &terms,
                                         &t_after));
      }
      std::cout << nlohmann::json{{"amplitude", {re, im}}, {"terms", terms}, {"t_count_after_simp", t_after}}.dump()
                << "\n";
      return kExitOk;
    }
    if (*stats) {
      CircuitPtr c = load_circuit(in_path, format);
      std::cout << stats_of(c.get()).dump() << "\n";
      return kExitOk;
    }
    if (*selftest) {
      std::mt19937 rng(seed);
      std::size_t passed = 0;
      for (std::size_t i = 0; i < count; ++i) {
        std::size_t qubits = 1 + i % 5;
        std::string text = random_qasm(rng, qubits, 30);
        zxopt_circuit* raw = nullptr;
        check(zxopt_circuit_parse(text.c_str(), "qasm", &raw));
        CircuitPtr c(raw);
        zxopt_circuit* oraw = nullptr;
        check(zxopt_optimize(c.get(), ZXOPT_STRATEGY_GADGET, &oraw));
        CircuitPtr o(oraw);
        int same = 0;
        check(zxopt_verify_oracle(c.get(), o.get(), &same));
        if (same) ++passed;
      }
      std::cout << nlohmann::json{{"seed", seed}, {"circuits", count}, {"passed", passed}}.dump() << "\n";
      return passed == count ? kExitOk : kExitError;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << zxopt_status_name(f.status) << ": " << f.message << "\n";
    switch (f.status) {
      case ZXOPT_ERR_PARSE:
      case ZXOPT_ERR_UNSUPPORTED_GATE:
      case ZXOPT_ERR_ARITY:
        return kExitParse;
      default:
        return kExitError;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
