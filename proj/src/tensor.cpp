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

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "zxopt/error.hpp"
#include "zxopt/verify.hpp"

namespace zxopt {

namespace {

using cd = std::complex<double>;

constexpr std::size_t kFactorVarLimit = 26;

/** Dense factor over binary variables; bit i of an index is vars[i]. */
struct Factor {
  std::vector<int> vars;
  std::vector<cd> table;
};

Factor multiply(const Factor& a, const Factor& b) {
  Factor r;
  std::set_union(a.vars.begin(), a.vars.end(), b.vars.begin(), b.vars.end(),
                 std::back_inserter(r.vars));
  if (r.vars.size() > kFactorVarLimit) {
    throw Error(ErrorKind::Resource, "tensor contraction exceeds the intermediate size budget");
  }
  auto positions = [&](const Factor& f) {
    std::vector<std::size_t> pos;
    for (int v : f.vars) {
      pos.push_back(static_cast<std::size_t>(
          std::lower_bound(r.vars.begin(), r.vars.end(), v) - r.vars.begin()));
    }
    return pos;
  };
  auto pa = positions(a);
  auto pb = positions(b);
  const std::size_t size = std::size_t{1} << r.vars.size();
  r.table.resize(size);
  for (std::size_t idx = 0; idx < size; ++idx) {
    std::size_t ia = 0;
    std::size_t ib = 0;
    for (std::size_t i = 0; i < pa.size(); ++i) ia |= ((idx >> pa[i]) & 1u) << i;
    for (std::size_t i = 0; i < pb.size(); ++i) ib |= ((idx >> pb[i]) & 1u) << i;
    r.table[idx] = a.table[ia] * b.table[ib];
  }
  return r;
}

Factor sum_out(const Factor& f, int var) {
  auto it = std::find(f.vars.begin(), f.vars.end(), var);
  const std::size_t p = static_cast<std::size_t>(it - f.vars.begin());
  Factor r;
  r.vars = f.vars;
  r.vars.erase(r.vars.begin() + static_cast<std::ptrdiff_t>(p));
  const std::size_t size = std::size_t{1} << r.vars.size();
  r.table.assign(size, 0.0);
  const std::size_t low = (std::size_t{1} << p) - 1;
  for (std::size_t idx = 0; idx < size; ++idx) {
    std::size_t base = (idx & low) | ((idx & ~low) << 1);
    r.table[idx] = f.table[base] + f.table[base | (std::size_t{1} << p)];
  }
  return r;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

DenseMap DenseMap::adjoint() const {
  DenseMap r(cols, rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) r.at(j, i) = std::conj(at(i, j));
  }
  return r;
}

DenseMap DenseMap::operator*(const DenseMap& o) const {
  if (cols != o.rows) throw Error(ErrorKind::Arity, "dense map dimension mismatch");
  DenseMap r(rows, o.cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < cols; ++k) {
      const cd a = at(i, k);
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < o.cols; ++j) r.at(i, j) += a * o.at(k, j);
    }
  }
  return r;
}

double DenseMap::max_abs_diff(const DenseMap& o) const {
  if (rows != o.rows || cols != o.cols) return INFINITY;
  double m = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) m = std::max(m, std::abs(data[i] - o.data[i]));
  return m;
}

DenseMap to_tensor(const ZxDiagram& d) {
  const std::size_t legs = d.inputs().size() + d.outputs().size();
  if (legs > kTensorLegLimit) {
    throw Error(ErrorKind::Resource, "tensor oracle limited to " +
                                         std::to_string(kTensorLegLimit) + " legs, got " +
                                         std::to_string(legs));
  }
  const std::size_t n = d.id_bound();
  UnionFind uf(n);
  auto is_x = [&](Vertex v) { return d.kind(v) == VertexKind::X; };
  std::vector<std::pair<Vertex, Vertex>> h_edges;
  for (Vertex v : d.vertices()) {
    for (const auto& [w, k] : d.neighbors(v)) {
      if (w < v) continue;
      bool had = (k == EdgeKind::Hadamard) ^ is_x(v) ^ is_x(w);
      if (had) {
        h_edges.emplace_back(v, w);
      } else {
        uf.unite(v, w);
      }
    }
  }
  std::vector<Factor> factors;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (auto [v, w] : h_edges) {
    int a = static_cast<int>(uf.find(v));
    int b = static_cast<int>(uf.find(w));
    if (a == b) {
      factors.push_back({{a}, {inv_sqrt2, -inv_sqrt2}});
    } else {
      Factor f;
      f.vars = {std::min(a, b), std::max(a, b)};
      f.table = {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2};
      factors.push_back(f);
    }
  }
  std::vector<int> all_vars;
  for (Vertex v : d.vertices()) {
    int a = static_cast<int>(uf.find(v));
    all_vars.push_back(a);
    if (d.is_spider(v) && !d.phase(v).is_zero()) factors.push_back({{a}, {1.0, d.phase(v).exp_i()}});
  }
  std::sort(all_vars.begin(), all_vars.end());
  all_vars.erase(std::unique(all_vars.begin(), all_vars.end()), all_vars.end());

  std::vector<Vertex> boundary_order = d.outputs();
  boundary_order.insert(boundary_order.end(), d.inputs().begin(), d.inputs().end());
  std::vector<int> open;
  for (Vertex b : boundary_order) open.push_back(static_cast<int>(uf.find(b)));
  std::vector<int> open_sorted = open;
  std::sort(open_sorted.begin(), open_sorted.end());
  open_sorted.erase(std::unique(open_sorted.begin(), open_sorted.end()), open_sorted.end());

  cd global = d.scalar().value();
  std::vector<int> elim;
  for (int v : all_vars) {
    if (!std::binary_search(open_sorted.begin(), open_sorted.end(), v)) elim.push_back(v);
  }
  // Greedy elimination: smallest resulting factor first.
  while (!elim.empty()) {
    std::size_t best = 0;
    std::size_t best_size = SIZE_MAX;
    for (std::size_t i = 0; i < elim.size(); ++i) {
      std::vector<int> u;
      for (const auto& f : factors) {
        if (std::binary_search(f.vars.begin(), f.vars.end(), elim[i])) {
          u.insert(u.end(), f.vars.begin(), f.vars.end());
        }
      }
      std::sort(u.begin(), u.end());
      u.erase(std::unique(u.begin(), u.end()), u.end());
      if (u.size() < best_size) {
        best_size = u.size();
        best = i;
      }
    }
    int var = elim[best];
    elim.erase(elim.begin() + static_cast<std::ptrdiff_t>(best));
    Factor prod{{}, {1.0}};
    bool any = false;
    std::vector<Factor> rest;
    for (auto& f : factors) {
      if (std::binary_search(f.vars.begin(), f.vars.end(), var)) {
        prod = multiply(prod, f);
        any = true;
      } else {
        rest.push_back(std::move(f));
      }
    }
    factors = std::move(rest);
    if (!any) {
      global *= 2.0;
      continue;
    }
    Factor s = sum_out(prod, var);
    if (s.vars.empty()) {
      global *= s.table[0];
    } else {
      factors.push_back(std::move(s));
    }
  }
  Factor total{{}, {1.0}};
  for (const auto& f : factors) total = multiply(total, f);
  // Open variables that no factor touches are free copies: entries are 1.
  const std::size_t nout = d.outputs().size();
  const std::size_t nin = d.inputs().size();
  DenseMap m(std::size_t{1} << nout, std::size_t{1} << nin);
  std::vector<std::size_t> pos(open.size());
  for (std::size_t i = 0; i < open.size(); ++i) {
    auto it = std::lower_bound(total.vars.begin(), total.vars.end(), open[i]);
    pos[i] = (it != total.vars.end() && *it == open[i])
                 ? static_cast<std::size_t>(it - total.vars.begin())
                 : SIZE_MAX;
  }
  const std::size_t nlegs = open.size();
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      std::size_t full = (r << nin) | c;
      std::map<int, int> assign;
      bool ok = true;
      std::size_t idx = 0;
      for (std::size_t i = 0; i < nlegs && ok; ++i) {
        int bit = static_cast<int>((full >> (nlegs - 1 - i)) & 1u);
        auto [it, inserted] = assign.emplace(open[i], bit);
        if (!inserted && it->second != bit) ok = false;
        if (pos[i] != SIZE_MAX) idx |= static_cast<std::size_t>(bit) << pos[i];
      }
      m.at(r, c) = ok ? global * total.table[idx] : 0.0;
    }
  }
  return m;
}

DenseMap circuit_unitary(const Circuit& c) {
  if (c.qubits > kOracleQubitLimit) {
    throw Error(ErrorKind::Resource, "dense oracle limited to " +
                                         std::to_string(kOracleQubitLimit) + " qubits");
  }
  const std::size_t dim = std::size_t{1} << c.qubits;
  DenseMap u(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) u.at(i, i) = 1.0;
  auto mask = [&](std::size_t q) { return std::size_t{1} << (c.qubits - 1 - q); };
  auto row = [&](std::size_t r) { return &u.data[r * dim]; };
  const double s = 1.0 / std::sqrt(2.0);
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case GateKind::ZPhase: {
        const cd e = g.phase.exp_i();
        for (std::size_t r = 0; r < dim; ++r) {
          if (r & mask(g.q[0])) {
            cd* p = row(r);
            for (std::size_t j = 0; j < dim; ++j) p[j] *= e;
          }
        }
        break;
      }
      case GateKind::XPhase:
      case GateKind::H: {
        cd m00, m01, m10, m11;
        if (g.kind == GateKind::H) {
          m00 = m01 = m10 = s;
          m11 = -s;
        } else {
          const cd e = g.phase.exp_i();
          m00 = m11 = (1.0 + e) / 2.0;
          m01 = m10 = (1.0 - e) / 2.0;
        }
        const std::size_t mk = mask(g.q[0]);
        for (std::size_t r = 0; r < dim; ++r) {
          if (r & mk) continue;
          cd* a = row(r);
          cd* b = row(r | mk);
          for (std::size_t j = 0; j < dim; ++j) {
            const cd x = a[j];
            const cd y = b[j];
            a[j] = m00 * x + m01 * y;
            b[j] = m10 * x + m11 * y;
          }
        }
        break;
      }
      case GateKind::CNOT:
      case GateKind::CCX: {
        std::size_t ctrl = mask(g.q[0]);
        std::size_t tgt = mask(g.q[1]);
        if (g.kind == GateKind::CCX) {
          ctrl |= mask(g.q[1]);
          tgt = mask(g.q[2]);
        }
        for (std::size_t r = 0; r < dim; ++r) {
          if ((r & ctrl) == ctrl && !(r & tgt)) std::swap_ranges(row(r), row(r) + dim, row(r | tgt));
        }
        break;
      }
      case GateKind::CZ:
      case GateKind::CCZ: {
        std::size_t all = mask(g.q[0]) | mask(g.q[1]);
        if (g.kind == GateKind::CCZ) all |= mask(g.q[2]);
        for (std::size_t r = 0; r < dim; ++r) {
          if ((r & all) == all) {
            cd* p = row(r);
            for (std::size_t j = 0; j < dim; ++j) p[j] = -p[j];
          }
        }
        break;
      }
      case GateKind::SWAP: {
        const std::size_t a = mask(g.q[0]);
        const std::size_t b = mask(g.q[1]);
        for (std::size_t r = 0; r < dim; ++r) {
          if ((r & a) && !(r & b)) std::swap_ranges(row(r), row(r) + dim, row((r & ~a) | b));
        }
        break;
      }
    }
  }
  return u;
}

bool equal_up_to_phase(const DenseMap& a, const DenseMap& b, double tol) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  std::size_t k = 0;
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    if (std::abs(a.data[i]) > std::abs(a.data[k])) k = i;
  }
  if (std::abs(a.data[k]) < tol) return a.max_abs_diff(b) <= tol;
  cd z = b.data[k] / a.data[k];
  if (std::abs(std::abs(z) - 1.0) > tol) return false;
  z /= std::abs(z);
  double m = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i) m = std::max(m, std::abs(z * a.data[i] - b.data[i]));
  return m <= tol;
}

bool proportional(const DenseMap& a, const DenseMap& b, double tol) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  std::size_t k = 0;
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    if (std::abs(a.data[i]) > std::abs(a.data[k])) k = i;
  }
  if (std::abs(a.data[k]) < tol) return false;
  const cd z = b.data[k] / a.data[k];
  if (std::abs(z) < tol) return false;
  double m = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i) m = std::max(m, std::abs(z * a.data[i] - b.data[i]));
  return m <= tol * std::max(1.0, std::abs(z));
}

bool equal_oracle(const Circuit& c1, const Circuit& c2, double tol) {
  if (c1.qubits != c2.qubits) throw Error(ErrorKind::Arity, "qubit count mismatch");
  return equal_up_to_phase(circuit_unitary(c1), circuit_unitary(c2), tol);
}

}  // namespace zxopt
