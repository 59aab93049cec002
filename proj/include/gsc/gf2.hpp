// Copyright 2026 The gsc developers
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

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace gsc {

/// Dense bit vector over GF(2), packed 64 bits per word. Addition is XOR.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}
  static BitVector from_bits(std::initializer_list<int> bits);
  static BitVector unit(std::size_t len, std::size_t i);

  std::size_t size() const { return len_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    std::uint64_t m = std::uint64_t(1) << (i & 63);
    if (v) {
      words_[i >> 6] |= m;
    } else {
      words_[i >> 6] &= ~m;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }
  void clear();

  bool any() const;
  bool is_zero() const { return !any(); }
  std::size_t count() const;
  std::optional<std::size_t> first_set() const;
  std::vector<std::size_t> set_bits() const;

  void xor_with(const BitVector& o);
  BitVector& operator^=(const BitVector& o) {
    xor_with(o);
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) {
    a ^= b;
    return a;
  }
  bool operator==(const BitVector&) const = default;

  std::string to_string() const;

 private:
  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense GF(2) matrix stored as packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), row_(rows, BitVector(cols)) {}
  static BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return row_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { row_[r].set(c, v); }
  void flip(std::size_t r, std::size_t c) { row_[r].flip(c); }
  const BitVector& row(std::size_t r) const { return row_[r]; }
  BitVector& row(std::size_t r) { return row_[r]; }
  void xor_row_into(std::size_t dst, std::size_t src) { row_[dst] ^= row_[src]; }
  void append_row(const BitVector& v);

  BitMatrix transposed() const;
  bool operator==(const BitMatrix&) const = default;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BitVector> row_;
};

/// GF(2) row rank. The input is not mutated.
std::size_t rank(const BitMatrix& m);
std::size_t rank(std::vector<BitVector> rows);

/// Greedy basis selection: scans rows in `preference` order and keeps each row
/// that is independent of those already kept. The result spans the row space.
std::vector<std::size_t> select_row_basis(const BitMatrix& m,
                                          const std::vector<std::size_t>& preference);
std::vector<std::size_t> select_row_basis(const BitMatrix& m);

/// Writes v as an XOR of basis vectors and returns the selected indices, or
/// nullopt when v is outside the span. When the basis is independent the
/// subset is unique.
std::optional<std::vector<std::size_t>> express_in_basis(const BitVector& v,
                                                         const std::vector<BitVector>& basis);

/// Incremental row-echelon basis that remembers, for every echelon row, which
/// inserted vectors it is a combination of. Dependent insertions are dropped
/// but still consume an insertion index.
class RowBasis {
 public:
  explicit RowBasis(std::size_t width) : width_(width) {}

  /// Returns true when v was independent of the current basis.
  bool insert(const BitVector& v);
  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }
  bool contains(const BitVector& v) const;

  /// Expresses v over the inserted vectors; indices refer to insertion order.
  std::optional<std::vector<std::size_t>> express(const BitVector& v) const;

 private:
  struct EchelonRow {
    BitVector vec;
    BitVector combo;  // over insertion indices
    std::size_t pivot;
  };
  std::size_t width_;
  std::size_t inserted_ = 0;
  std::vector<EchelonRow> rows_;
};

}  // namespace gsc
