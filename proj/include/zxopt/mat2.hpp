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

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace zxopt {

/** Dense matrix over GF(2), row-major. */
class Mat2 {
 public:
  Mat2() = default;
  Mat2(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}
  /** Builds from rows of '0'/'1' characters, e.g. {"110", "011"}. */
  static Mat2 from_strings(const std::vector<std::string>& rows);
  static Mat2 identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint8_t at(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, bool v) { bits_[r * cols_ + c] = v ? 1 : 0; }
  void flip(std::size_t r, std::size_t c) { bits_[r * cols_ + c] ^= 1; }

  /** Row target += row source. */
  void row_add(std::size_t source, std::size_t target);
  std::size_t row_weight(std::size_t r) const;
  /** Column index of the only 1 in row r, if the row has exactly one. */
  std::optional<std::size_t> single_one(std::size_t r) const;
  std::string to_string() const;

  bool operator==(const Mat2& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

std::ostream& operator<<(std::ostream& os, const Mat2& m);

/** target += source (mod 2). */
struct RowOp {
  std::size_t source = 0;
  std::size_t target = 0;
  bool operator==(const RowOp&) const = default;
};

void apply_row_ops(Mat2& m, const std::vector<RowOp>& ops);

enum class GaussMode { FullRref, EarlyStop };

struct GaussOptions {
  GaussMode mode = GaussMode::FullRref;
  /** Picks each pivot column greedily by fewest remaining 1s instead of left to right. */
  bool column_heuristic = false;
};

struct GaussResult {
  Mat2 matrix;
  std::vector<RowOp> ops;
};

/**
 * Row reduction with a logged op list. EarlyStop truncates the full log at the
 * first prefix that yields a row with a single 1 and keeps only the ops those
 * rows depend on.
 */
GaussResult gauss_reduce(const Mat2& m, const GaussOptions& opts = {});

/** Some x with a x = b, free variables set to 0; nullopt if inconsistent. */
std::optional<std::vector<std::uint8_t>> solve_gf2(const Mat2& a, const std::vector<std::uint8_t>& b);

}  // namespace zxopt
