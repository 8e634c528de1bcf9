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

#include "zxopt/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <json.hpp>
#include <map>
#include <numeric>
#include <sstream>

#include "zxopt/error.hpp"

namespace zxopt {

std::size_t Gate::arity() const {
  switch (kind) {
    case GateKind::ZPhase:
    case GateKind::XPhase:
    case GateKind::H:
      return 1;
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::SWAP:
      return 2;
    case GateKind::CCZ:
    case GateKind::CCX:
      return 3;
  }
  return 0;
}

bool Gate::operator==(const Gate& o) const {
  if (kind != o.kind) return false;
  for (std::size_t i = 0; i < arity(); ++i) {
    if (q[i] != o.q[i]) return false;
  }
  return !is_phase() || phase == o.phase;
}

void Circuit::add(const Gate& g) {
  for (std::size_t i = 0; i < g.arity(); ++i) {
    if (g.q[i] >= qubits) {
      throw Error(ErrorKind::InvalidArgument, "qubit index " + std::to_string(g.q[i]) +
                                                  " out of range for " + std::to_string(qubits) +
                                                  " qubits");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (g.q[i] == g.q[j]) throw Error(ErrorKind::InvalidArgument, "repeated qubit in gate");
    }
  }
  gates.push_back(g);
}

// ---------------------------------------------------------------- QASM

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return s;
}

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg);
}

/** Exact rational r = n/d. */
struct Rat {
  std::int64_t n = 0;
  std::int64_t d = 1;

  static Rat make(std::int64_t n, std::int64_t d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    std::int64_t g = std::gcd(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return {n, d};
  }
  Rat operator+(Rat o) const { return make(n * o.d + o.n * d, d * o.d); }
  Rat operator-(Rat o) const { return make(n * o.d - o.n * d, d * o.d); }
  Rat operator*(Rat o) const { return make(n * o.n, d * o.d); }
  bool zero() const { return n == 0; }
};

/** Angle expression value c + p*pi with rational c and p. */
struct AngleVal {
  Rat c;
  Rat p;
};

class AngleParser {
 public:
  AngleParser(const std::string& s, int line) : s_(s), line_(line) {}

  Phase parse() {
    AngleVal v = expr();
    skip();
    if (pos_ != s_.size()) parse_fail(line_, "trailing characters in angle '" + s_ + "'");
    if (!v.c.zero()) parse_fail(line_, "angle '" + s_ + "' is not a rational multiple of pi");
    return Phase(v.p.n, v.p.d);
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char ch) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  AngleVal expr() {
    AngleVal v = term();
    while (true) {
      if (eat('+')) {
        AngleVal r = term();
        v = {v.c + r.c, v.p + r.p};
      } else if (eat('-')) {
        AngleVal r = term();
        v = {v.c - r.c, v.p - r.p};
      } else {
        return v;
      }
    }
  }

  AngleVal term() {
    AngleVal v = unary();
    while (true) {
      if (eat('*')) {
        AngleVal r = unary();
        if (!v.p.zero() && !r.p.zero()) parse_fail(line_, "pi squared in angle");
        v = {v.c * r.c, v.c * r.p + v.p * r.c};
      } else if (eat('/')) {
        AngleVal r = unary();
        if (!r.p.zero() || r.c.zero()) parse_fail(line_, "angle divisor must be a nonzero integer");
        Rat inv = Rat::make(r.c.d, r.c.n);
        v = {v.c * inv, v.p * inv};
      } else {
        return v;
      }
    }
  }

  AngleVal unary() {
    if (eat('-')) {
      AngleVal v = unary();
      return {Rat{} - v.c, Rat{} - v.p};
    }
    if (eat('+')) return unary();
    return atom();
  }

  AngleVal atom() {
    skip();
    if (eat('(')) {
      AngleVal v = expr();
      if (!eat(')')) parse_fail(line_, "unbalanced parenthesis in angle");
      return v;
    }
    if (s_.compare(pos_, 2, "pi") == 0) {
      pos_ += 2;
      return {Rat{}, Rat{1, 1}};
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) parse_fail(line_, "bad angle '" + s_ + "'");
    if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E')) {
      parse_fail(line_, "non-rational angle literal '" + s_ + "'");
    }
    return {Rat{std::stoll(s_.substr(start, pos_ - start)), 1}, Rat{}};
  }

  const std::string& s_;
  int line_;
  std::size_t pos_ = 0;
};

struct QasmRegs {
  std::map<std::string, std::pair<std::size_t, std::size_t>> regs;  // name -> (offset, size)
  std::size_t total = 0;
};

std::size_t parse_qubit_ref(const std::string& tok, const QasmRegs& r, int line) {
  auto lb = tok.find('[');
  auto rb = tok.find(']');
  if (lb == std::string::npos || rb == std::string::npos || rb < lb || rb != tok.size() - 1) {
    parse_fail(line, "bad qubit reference '" + tok + "'");
  }
  std::string name = trim(tok.substr(0, lb));
  auto it = r.regs.find(name);
  if (it == r.regs.end()) parse_fail(line, "unknown register '" + name + "'");
  std::size_t idx = 0;
  try {
    idx = std::stoul(tok.substr(lb + 1, rb - lb - 1));
  } catch (const std::exception&) {
    parse_fail(line, "bad qubit index in '" + tok + "'");
  }
  if (idx >= it->second.second) parse_fail(line, "qubit index out of range in '" + tok + "'");
  return it->second.first + idx;
}

std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

}  // namespace

Circuit parse_qasm(const std::string& text) {
  // Strip // comments while keeping line structure.
  std::string clean;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      auto c = line.find("//");
      if (c != std::string::npos) line = line.substr(0, c);
      clean += line + "\n";
    }
  }
  QasmRegs regs;
  std::vector<std::pair<Gate, int>> pending;
  int line = 1;
  std::size_t pos = 0;
  bool saw_header = false;
  while (pos < clean.size()) {
    auto semi = clean.find(';', pos);
    std::string raw = clean.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
    int stmt_line = line;
    for (char ch : raw) {
      if (ch == '\n') ++line;
    }
    // The statement line is where its first token starts.
    {
      std::size_t i = 0;
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) {
        if (raw[i] == '\n') ++stmt_line;
        ++i;
      }
    }
    std::string stmt = trim(raw);
    if (semi == std::string::npos) {
      if (!stmt.empty()) parse_fail(stmt_line, "missing ';'");
      break;
    }
    pos = semi + 1;
    if (stmt.empty()) continue;
    if (stmt.rfind("OPENQASM", 0) == 0) {
      if (trim(stmt.substr(8)) != "2.0") parse_fail(stmt_line, "unsupported OPENQASM version");
      saw_header = true;
      continue;
    }
    if (stmt.rfind("include", 0) == 0) continue;
    if (stmt.rfind("qreg", 0) == 0) {
      std::string decl = trim(stmt.substr(4));
      auto lb = decl.find('[');
      auto rb = decl.find(']');
      if (lb == std::string::npos || rb == std::string::npos || rb != decl.size() - 1) {
        parse_fail(stmt_line, "malformed qreg declaration");
      }
      std::string name = trim(decl.substr(0, lb));
      std::size_t size = 0;
      try {
        size = std::stoul(decl.substr(lb + 1, rb - lb - 1));
      } catch (const std::exception&) {
        parse_fail(stmt_line, "malformed qreg size");
      }
      if (name.empty() || regs.regs.count(name)) parse_fail(stmt_line, "bad register name");
      regs.regs[name] = {regs.total, size};
      regs.total += size;
      continue;
    }
    // Gate application: name[(angle)] args
    std::size_t name_end = 0;
    while (name_end < stmt.size() &&
           (std::isalnum(static_cast<unsigned char>(stmt[name_end])) || stmt[name_end] == '_')) {
      ++name_end;
    }
    std::string name = stmt.substr(0, name_end);
    std::string rest = trim(stmt.substr(name_end));
    std::optional<Phase> angle;
    if (!rest.empty() && rest[0] == '(') {
      int depth = 0;
      std::size_t close = std::string::npos;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (rest[i] == '(') ++depth;
        if (rest[i] == ')' && --depth == 0) {
          close = i;
          break;
        }
      }
      if (close == std::string::npos) parse_fail(stmt_line, "unbalanced parenthesis");
      std::string a = rest.substr(1, close - 1);
      angle = AngleParser(a, stmt_line).parse();
      rest = trim(rest.substr(close + 1));
    }
    std::vector<std::size_t> qs;
    if (!rest.empty()) {
      for (const auto& tok : split_args(rest)) qs.push_back(parse_qubit_ref(tok, regs, stmt_line));
    }
    auto need = [&](std::size_t n, bool wants_angle) {
      if (qs.size() != n) parse_fail(stmt_line, "gate '" + name + "' expects " + std::to_string(n) + " qubits");
      if (wants_angle != angle.has_value()) parse_fail(stmt_line, "bad parameter list for '" + name + "'");
    };
    Gate g;
    if (name == "h") {
      need(1, false);
      g = Gate::h(qs[0]);
    } else if (name == "x") {
      need(1, false);
      g = Gate::xphase(qs[0], Phase::pi());
    } else if (name == "z") {
      need(1, false);
      g = Gate::zphase(qs[0], Phase::pi());
    } else if (name == "s") {
      need(1, false);
      g = Gate::zphase(qs[0], Phase(1, 2));
    } else if (name == "sdg") {
      need(1, false);
      g = Gate::zphase(qs[0], Phase(3, 2));
    } else if (name == "t") {
      need(1, false);
      g = Gate::zphase(qs[0], Phase(1, 4));
    } else if (name == "tdg") {
      need(1, false);
      g = Gate::zphase(qs[0], Phase(7, 4));
    } else if (name == "rz") {
      need(1, true);
      g = Gate::zphase(qs[0], *angle);
    } else if (name == "rx") {
      need(1, true);
      g = Gate::xphase(qs[0], *angle);
    } else if (name == "cx") {
      need(2, false);
      g = Gate::cnot(qs[0], qs[1]);
    } else if (name == "cz") {
      need(2, false);
      g = Gate::cz(qs[0], qs[1]);
    } else if (name == "swap") {
      need(2, false);
      g = Gate::swap(qs[0], qs[1]);
    } else if (name == "ccx") {
      need(3, false);
      g = Gate::ccx(qs[0], qs[1], qs[2]);
    } else if (name == "ccz") {
      need(3, false);
      g = Gate::ccz(qs[0], qs[1], qs[2]);
    } else {
      parse_fail(stmt_line, "unknown gate '" + name + "'");
    }
    for (std::size_t i = 0; i < g.arity(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (g.q[i] == g.q[j]) parse_fail(stmt_line, "repeated qubit in '" + name + "'");
      }
    }
    pending.emplace_back(g, stmt_line);
  }
  (void)saw_header;
  if (regs.total == 0 && !pending.empty()) parse_fail(1, "gates before any qreg declaration");
  Circuit c;
  c.qubits = regs.total;
  for (const auto& [g, l] : pending) c.add(g);
  return c;
}

std::string emit_qasm(const Circuit& c) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << c.qubits << "];\n";
  auto q = [](std::size_t i) { return "q[" + std::to_string(i) + "]"; };
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case GateKind::ZPhase: {
        const Phase& p = g.phase;
        if (p == Phase(1, 2)) {
          os << "s ";
        } else if (p == Phase(3, 2)) {
          os << "sdg ";
        } else if (p == Phase::pi()) {
          os << "z ";
        } else if (p == Phase(1, 4)) {
          os << "t ";
        } else if (p == Phase(7, 4)) {
          os << "tdg ";
        } else {
          os << "rz(" << p.to_qasm() << ") ";
        }
        os << q(g.q[0]) << ";\n";
        break;
      }
      case GateKind::XPhase:
        if (g.phase == Phase::pi()) {
          os << "x " << q(g.q[0]) << ";\n";
        } else {
          os << "rx(" << g.phase.to_qasm() << ") " << q(g.q[0]) << ";\n";
        }
        break;
      case GateKind::H:
        os << "h " << q(g.q[0]) << ";\n";
        break;
      case GateKind::CNOT:
        os << "cx " << q(g.q[0]) << "," << q(g.q[1]) << ";\n";
        break;
      case GateKind::CZ:
        os << "cz " << q(g.q[0]) << "," << q(g.q[1]) << ";\n";
        break;
      case GateKind::SWAP:
        os << "swap " << q(g.q[0]) << "," << q(g.q[1]) << ";\n";
        break;
      case GateKind::CCZ:
        os << "ccz " << q(g.q[0]) << "," << q(g.q[1]) << "," << q(g.q[2]) << ";\n";
        break;
      case GateKind::CCX:
        os << "ccx " << q(g.q[0]) << "," << q(g.q[1]) << "," << q(g.q[2]) << ";\n";
        break;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- .qc

Circuit parse_qc(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::map<std::string, std::size_t> vars;
  std::vector<std::string> order;
  std::vector<std::pair<Gate, int>> gates;
  bool in_body = false;
  bool saw_begin = false;
  bool saw_end = false;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string s = trim(raw);
    if (s.empty()) continue;
    std::istringstream ls(s);
    std::string head;
    ls >> head;
    std::string lhead = lower(head);
    if (lhead == "begin" || lhead == ".begin") {
      if (saw_begin) parse_fail(line, "duplicate BEGIN");
      in_body = saw_begin = true;
      continue;
    }
    if (lhead == "end" || lhead == ".end") {
      if (!in_body) parse_fail(line, "END without BEGIN");
      in_body = false;
      saw_end = true;
      continue;
    }
    if (!in_body) {
      if (saw_end) parse_fail(line, "content after END");
      if (lhead == ".v") {
        std::string v;
        std::string rest;
        std::getline(ls, rest);
        for (char& ch : rest) {
          if (ch == ',') ch = ' ';
        }
        std::istringstream vs(rest);
        while (vs >> v) {
          if (vars.count(v)) parse_fail(line, "duplicate variable '" + v + "'");
          vars[v] = order.size();
          order.push_back(v);
        }
        continue;
      }
      if (!head.empty() && head[0] == '.') continue;  // .i .o .c and friends
      parse_fail(line, "unexpected header line '" + s + "'");
    }
    std::vector<std::size_t> args;
    {
      std::string rest;
      std::getline(ls, rest);
      for (char& ch : rest) {
        if (ch == ',') ch = ' ';
      }
      std::istringstream as(rest);
      std::string a;
      while (as >> a) {
        auto it = vars.find(a);
        if (it == vars.end()) parse_fail(line, "undeclared variable '" + a + "'");
        args.push_back(it->second);
      }
    }
    if (args.empty()) parse_fail(line, "gate '" + head + "' without arguments");
    std::string n = lower(head);
    auto one = [&](const Gate& g) {
      if (args.size() != 1) parse_fail(line, "gate '" + head + "' takes one argument");
      gates.emplace_back(g, line);
    };
    auto multi_x = [&]() {
      switch (args.size()) {
        case 1:
          gates.emplace_back(Gate::xphase(args[0], Phase::pi()), line);
          break;
        case 2:
          gates.emplace_back(Gate::cnot(args[0], args[1]), line);
          break;
        case 3:
          gates.emplace_back(Gate::ccx(args[0], args[1], args[2]), line);
          break;
        default:
          throw Error(ErrorKind::UnsupportedGate,
                      "line " + std::to_string(line) + ": more than two controls");
      }
    };
    bool tn = n.size() >= 2 && n[0] == 't' &&
              std::all_of(n.begin() + 1, n.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
    if (n == "h") {
      one(Gate::h(args[0]));
    } else if (n == "s" || n == "p") {
      one(Gate::zphase(args[0], Phase(1, 2)));
    } else if (n == "s*" || n == "p*") {
      one(Gate::zphase(args[0], Phase(3, 2)));
    } else if (n == "t" && args.size() == 1) {
      one(Gate::zphase(args[0], Phase(1, 4)));
    } else if (n == "t*") {
      one(Gate::zphase(args[0], Phase(7, 4)));
    } else if (n == "tof" || n == "not" || n == "x" || n == "cnot" || tn) {
      if (tn && std::stoul(n.substr(1)) != args.size()) {
        parse_fail(line, "gate '" + head + "' has wrong argument count");
      }
      if (n == "cnot" && args.size() != 2) parse_fail(line, "cnot takes two arguments");
      multi_x();
    } else if (n == "z" || n == "cz" || n == "ccz") {
      switch (args.size()) {
        case 1:
          gates.emplace_back(Gate::zphase(args[0], Phase::pi()), line);
          break;
        case 2:
          gates.emplace_back(Gate::cz(args[0], args[1]), line);
          break;
        case 3:
          gates.emplace_back(Gate::ccz(args[0], args[1], args[2]), line);
          break;
        default:
          throw Error(ErrorKind::UnsupportedGate,
                      "line " + std::to_string(line) + ": more than two controls");
      }
    } else if (n == "swap") {
      if (args.size() != 2) parse_fail(line, "swap takes two arguments");
      gates.emplace_back(Gate::swap(args[0], args[1]), line);
    } else {
      parse_fail(line, "unknown gate '" + head + "'");
    }
    const Gate& g = gates.back().first;
    for (std::size_t i = 0; i < g.arity(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (g.q[i] == g.q[j]) parse_fail(line, "repeated argument");
      }
    }
  }
  if (!saw_begin) parse_fail(line, "missing BEGIN");
  if (in_body) parse_fail(line, "missing END");
  Circuit c;
  c.qubits = order.size();
  for (const auto& [g, l] : gates) c.add(g);
  return c;
}

Circuit load_circuit_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  std::string ext = lower(path.substr(path.find_last_of('.') == std::string::npos ? path.size() : path.find_last_of('.')));
  Circuit c = (ext == ".qc" || ext == ".tfc") ? parse_qc(buf.str()) : parse_qasm(buf.str());
  auto slash = path.find_last_of('/');
  c.name = path.substr(slash == std::string::npos ? 0 : slash + 1);
  return c;
}

// ---------------------------------------------------------------- transforms

Circuit adjoint_circuit(const Circuit& c) {
  Circuit r;
  r.name = c.name;
  r.qubits = c.qubits;
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    Gate g = *it;
    if (g.is_phase()) g.phase = -g.phase;
    r.gates.push_back(g);
  }
  return r;
}

namespace {

void append_ccz(Circuit& out, std::size_t a, std::size_t b, std::size_t c) {
  const Phase t(1, 4);
  const Phase tdg(7, 4);
  out.add(Gate::zphase(a, t));
  out.add(Gate::zphase(b, t));
  out.add(Gate::zphase(c, t));
  out.add(Gate::cnot(a, b));
  out.add(Gate::zphase(b, tdg));
  out.add(Gate::cnot(a, b));
  out.add(Gate::cnot(a, c));
  out.add(Gate::zphase(c, tdg));
  out.add(Gate::cnot(a, c));
  out.add(Gate::cnot(b, c));
  out.add(Gate::zphase(c, tdg));
  out.add(Gate::cnot(b, c));
  out.add(Gate::cnot(a, c));
  out.add(Gate::cnot(b, c));
  out.add(Gate::zphase(c, t));
  out.add(Gate::cnot(b, c));
  out.add(Gate::cnot(a, c));
}

}  // namespace

Circuit decompose_ccz(const Circuit& c) {
  Circuit r;
  r.name = c.name;
  r.qubits = c.qubits;
  for (const auto& g : c.gates) {
    if (g.kind == GateKind::CCZ) {
      append_ccz(r, g.q[0], g.q[1], g.q[2]);
    } else if (g.kind == GateKind::CCX) {
      r.add(Gate::h(g.q[2]));
      append_ccz(r, g.q[0], g.q[1], g.q[2]);
      r.add(Gate::h(g.q[2]));
    } else {
      r.add(g);
    }
  }
  return r;
}

Stats stats(const Circuit& c) {
  Stats s;
  s.qubits = c.qubits;
  s.total_gates = c.gates.size();
  std::vector<std::size_t> level(c.qubits, 0);
  for (const auto& g : c.gates) {
    if (g.is_phase() && !g.phase.is_clifford()) ++s.t_count;
    if (g.kind == GateKind::CCZ || g.kind == GateKind::CCX) s.t_count += 7;
    if (g.arity() == 2) ++s.two_qubit_count;
    std::size_t l = 0;
    for (std::size_t i = 0; i < g.arity(); ++i) l = std::max(l, level[g.q[i]]);
    for (std::size_t i = 0; i < g.arity(); ++i) level[g.q[i]] = l + 1;
    s.depth = std::max(s.depth, l + 1);
  }
  return s;
}

std::string stats_json(const Stats& s) {
  nlohmann::json j = {{"qubits", s.qubits},
                      {"gates", s.total_gates},
                      {"tcount", s.t_count},
                      {"twoqubit", s.two_qubit_count},
                      {"depth", s.depth}};
  return j.dump();
}

// ---------------------------------------------------------------- to diagram

ZxDiagram circuit_to_diagram(const Circuit& input,
                             std::vector<std::optional<Vertex>>* gate_vertices) {
  const Circuit c = decompose_ccz(input);
  ZxDiagram d;
  std::vector<Vertex> last(c.qubits);
  std::vector<EdgeKind> pending(c.qubits, EdgeKind::Simple);
  std::vector<double> col(c.qubits, 1.0);
  std::vector<Vertex> ins;
  for (std::size_t q = 0; q < c.qubits; ++q) {
    last[q] = d.add_vertex(VertexKind::Boundary, {}, static_cast<double>(q), 0.0);
    ins.push_back(last[q]);
  }
  if (gate_vertices) gate_vertices->assign(c.gates.size(), std::nullopt);

  auto place = [&](std::size_t q, VertexKind k, const Phase& p, double at) {
    Vertex v = d.add_vertex(k, p, static_cast<double>(q), at);
    d.add_edge(last[q], v, pending[q]);
    pending[q] = EdgeKind::Simple;
    last[q] = v;
    col[q] = at + 1.0;
    return v;
  };

  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    switch (g.kind) {
      case GateKind::ZPhase:
      case GateKind::XPhase: {
        Vertex v = place(g.q[0], g.kind == GateKind::ZPhase ? VertexKind::Z : VertexKind::X,
                         g.phase, col[g.q[0]]);
        if (gate_vertices) (*gate_vertices)[i] = v;
        break;
      }
      case GateKind::H:
        pending[g.q[0]] = toggle(pending[g.q[0]]);
        break;
      case GateKind::CNOT:
      case GateKind::CZ: {
        double at = std::max(col[g.q[0]], col[g.q[1]]);
        Vertex a = place(g.q[0], VertexKind::Z, {}, at);
        Vertex b = place(g.q[1], g.kind == GateKind::CNOT ? VertexKind::X : VertexKind::Z, {}, at);
        d.add_edge(a, b, g.kind == GateKind::CNOT ? EdgeKind::Simple : EdgeKind::Hadamard);
        d.scalar().add_power(1);
        break;
      }
      case GateKind::SWAP:
        std::swap(last[g.q[0]], last[g.q[1]]);
        std::swap(pending[g.q[0]], pending[g.q[1]]);
        break;
      case GateKind::CCZ:
      case GateKind::CCX:
        break;  // removed by decompose_ccz
    }
  }
  double end = 1.0;
  for (double x : col) end = std::max(end, x);
  std::vector<Vertex> outs;
  for (std::size_t q = 0; q < c.qubits; ++q) {
    Vertex o = d.add_vertex(VertexKind::Boundary, {}, static_cast<double>(q), end);
    d.add_edge(last[q], o, pending[q]);
    outs.push_back(o);
  }
  d.set_inputs(ins);
  d.set_outputs(outs);
  return d;
}

}  // namespace zxopt
