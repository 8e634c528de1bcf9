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

#include "zxopt/mat2.hpp"

#include <algorithm>
#include <set>

#include "zxopt/error.hpp"

namespace zxopt {

Mat2 Mat2::from_strings(const std::vector<std::string>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Mat2 m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::InvalidArgument, "ragged GF(2) matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      char ch = rows[r][c];
      if (ch != '0' && ch != '1') throw Error(ErrorKind::InvalidArgument, "GF(2) entries must be 0 or 1");
      m.set(r, c, ch == '1');
    }
  }
  return m;
}

Mat2 Mat2::identity(std::size_t n) {
  Mat2 m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

void Mat2::row_add(std::size_t source, std::size_t target) {
  for (std::size_t c = 0; c < cols_; ++c) bits_[target * cols_ + c] ^= bits_[source * cols_ + c];
}

std::size_t Mat2::row_weight(std::size_t r) const {
  std::size_t w = 0;
  for (std::size_t c = 0; c < cols_; ++c) w += at(r, c);
  return w;
}

std::optional<std::size_t> Mat2::single_one(std::size_t r) const {
  std::optional<std::size_t> hit;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (!at(r, c)) continue;
    if (hit) return std::nullopt;
    hit = c;
  }
  return hit;
}

std::string Mat2::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) s += ';';
    for (std::size_t c = 0; c < cols_; ++c) s += at(r, c) ? '1' : '0';
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) { return os << m.to_string(); }

void apply_row_ops(Mat2& m, const std::vector<RowOp>& ops) {
  for (const RowOp& op : ops) m.row_add(op.source, op.target);
}

namespace {

std::vector<RowOp> full_elimination(Mat2& m, bool column_heuristic) {
  std::vector<RowOp> ops;
  std::vector<bool> used(m.cols(), false);
  std::size_t r = 0;
  for (std::size_t step = 0; step < m.cols() && r < m.rows(); ++step) {
    std::optional<std::size_t> col;
    if (column_heuristic) {
      // Fewest 1s among the rows not yet pivoted; counts refresh after every pivot.
      std::size_t best = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (used[c]) continue;
        std::size_t ones = 0;
        for (std::size_t i = r; i < m.rows(); ++i) ones += m.at(i, c);
        if (ones > 0 && (!col || ones < best)) {
          col = c;
          best = ones;
        }
      }
      if (!col) break;
    } else {
      col = step;
    }
    used[*col] = true;
    std::optional<std::size_t> pivot;
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (m.at(i, *col)) {
        pivot = i;
        break;
      }
    }
    if (!pivot) continue;
    if (*pivot != r) {
      m.row_add(*pivot, r);
      ops.push_back({*pivot, r});
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != r && m.at(i, *col)) {
        m.row_add(r, i);
        ops.push_back({r, i});
      }
    }
    ++r;
  }
  return ops;
}

std::vector<std::size_t> single_one_rows(const Mat2& m) {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m.single_one(r)) out.push_back(r);
  }
  return out;
}

}  // namespace

GaussResult gauss_reduce(const Mat2& m, const GaussOptions& opts) {
  GaussResult res{m, {}};
  res.ops = full_elimination(res.matrix, opts.column_heuristic);
  if (opts.mode == GaussMode::FullRref) return res;

  Mat2 cur = m;
  std::size_t prefix = 0;
  std::vector<std::size_t> targets = single_one_rows(cur);
  while (targets.empty() && prefix < res.ops.size()) {
    cur.row_add(res.ops[prefix].source, res.ops[prefix].target);
    ++prefix;
    targets = single_one_rows(cur);
  }
  if (targets.empty()) return res;  // nothing extractable; keep the full reduction
  std::set<std::size_t> needed(targets.begin(), targets.end());
  std::vector<RowOp> kept;
  for (std::size_t i = prefix; i-- > 0;) {
    const RowOp& op = res.ops[i];
    if (needed.count(op.target)) {
      kept.push_back(op);
      needed.insert(op.source);
    }
  }
  std::reverse(kept.begin(), kept.end());
  Mat2 out = m;
  apply_row_ops(out, kept);
  return {out, kept};
}

std::optional<std::vector<std::uint8_t>> solve_gf2(const Mat2& a, const std::vector<std::uint8_t>& b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::InvalidArgument, "right-hand side size mismatch");
  Mat2 aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.set(r, c, a.at(r, c));
    aug.set(r, a.cols(), b[r] != 0);
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::optional<std::size_t> p;
    for (std::size_t i = r; i < a.rows(); ++i) {
      if (aug.at(i, c)) {
        p = i;
        break;
      }
    }
    if (!p) continue;
    if (*p != r) aug.row_add(*p, r);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i != r && aug.at(i, c)) aug.row_add(r, i);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < a.rows(); ++i) {
    if (aug.at(i, a.cols())) return std::nullopt;
  }
  std::vector<std::uint8_t> x(a.cols(), 0);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = aug.at(i, a.cols());
  return x;
}

}  // namespace zxopt
