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

#include "gsc/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace gsc {

BitVector BitVector::from_bits(std::initializer_list<int> bits) {
  BitVector v(bits.size());
  std::size_t i = 0;
  for (int b : bits) {
    v.set(i++, b != 0);
  }
  return v;
}

BitVector BitVector::unit(std::size_t len, std::size_t i) {
  BitVector v(len);
  v.set(i, true);
  return v;
}

void BitVector::clear() {
  for (auto& w : words_) {
    w = 0;
  }
}

bool BitVector::any() const {
  for (auto w : words_) {
    if (w != 0) {
      return true;
    }
  }
  return false;
}

std::size_t BitVector::count() const {
  std::size_t c = 0;
  for (auto w : words_) {
    c += std::popcount(w);
  }
  return c;
}

std::optional<std::size_t> BitVector::first_set() const {
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    if (words_[wi] != 0) {
      return wi * 64 + std::countr_zero(words_[wi]);
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> BitVector::set_bits() const {
  std::vector<std::size_t> out;
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w != 0) {
      out.push_back(wi * 64 + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

void BitVector::xor_with(const BitVector& o) {
  if (o.len_ != len_) {
    throw std::invalid_argument("BitVector::xor_with: length mismatch");
  }
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] ^= o.words_[i];
  }
}

std::string BitVector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i) {
    if (get(i)) {
      s[i] = '1';
    }
  }
  return s;
}

BitMatrix BitMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  BitMatrix m;
  for (const auto& r : rows) {
    m.append_row(BitVector::from_bits(r));
  }
  return m;
}

void BitMatrix::append_row(const BitVector& v) {
  if (rows_ == 0 && cols_ == 0) {
    cols_ = v.size();
  }
  if (v.size() != cols_) {
    throw std::invalid_argument("BitMatrix::append_row: width mismatch");
  }
  row_.push_back(v);
  ++rows_;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c : row_[r].set_bits()) {
      t.set(c, r, true);
    }
  }
  return t;
}

std::string BitMatrix::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows_; ++r) {
    s += row_[r].to_string();
    s += '\n';
  }
  return s;
}

std::size_t rank(std::vector<BitVector> rows) {
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  std::vector<BitVector> basis;
  for (auto& v : rows) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (v.get(pivots[k])) {
        v ^= basis[k];
      }
    }
    auto p = v.first_set();
    if (p.has_value()) {
      pivots.push_back(*p);
      basis.push_back(std::move(v));
      ++r;
    }
  }
  return r;
}

std::size_t rank(const BitMatrix& m) {
  std::vector<BitVector> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows.push_back(m.row(i));
  }
  return rank(std::move(rows));
}

std::vector<std::size_t> select_row_basis(const BitMatrix& m,
                                          const std::vector<std::size_t>& preference) {
  if (preference.size() != m.rows()) {
    throw std::invalid_argument("select_row_basis: preference must cover all rows");
  }
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> pivots;
  std::vector<BitVector> basis;
  for (std::size_t idx : preference) {
    BitVector v = m.row(idx);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (v.get(pivots[k])) {
        v ^= basis[k];
      }
    }
    auto p = v.first_set();
    if (p.has_value()) {
      chosen.push_back(idx);
      pivots.push_back(*p);
      basis.push_back(std::move(v));
    }
  }
  return chosen;
}

std::vector<std::size_t> select_row_basis(const BitMatrix& m) {
  std::vector<std::size_t> pref(m.rows());
  for (std::size_t i = 0; i < pref.size(); ++i) {
    pref[i] = i;
  }
  return select_row_basis(m, pref);
}

std::optional<std::vector<std::size_t>> express_in_basis(const BitVector& v,
                                                         const std::vector<BitVector>& basis) {
  RowBasis rb(v.size());
  for (const auto& b : basis) {
    if (b.size() != v.size()) {
      throw std::invalid_argument("express_in_basis: length mismatch");
    }
    rb.insert(b);
  }
  return rb.express(v);
}

bool RowBasis::insert(const BitVector& v) {
  if (v.size() != width_) {
    throw std::invalid_argument("RowBasis::insert: width mismatch");
  }
  BitVector cur = v;
  BitVector combo(inserted_ + 1);
  combo.set(inserted_, true);
  for (const auto& row : rows_) {
    if (cur.get(row.pivot)) {
      cur ^= row.vec;
      for (std::size_t b : row.combo.set_bits()) {
        combo.flip(b);
      }
    }
  }
  ++inserted_;
  auto p = cur.first_set();
  if (!p.has_value()) {
    return false;
  }
  rows_.push_back(EchelonRow{std::move(cur), std::move(combo), *p});
  return true;
}

bool RowBasis::contains(const BitVector& v) const {
  BitVector cur = v;
  for (const auto& row : rows_) {
    if (cur.get(row.pivot)) {
      cur ^= row.vec;
    }
  }
  return cur.is_zero();
}

std::optional<std::vector<std::size_t>> RowBasis::express(const BitVector& v) const {
  if (v.size() != width_) {
    throw std::invalid_argument("RowBasis::express: width mismatch");
  }
  BitVector cur = v;
  std::vector<bool> combo(inserted_, false);
  for (const auto& row : rows_) {
    if (cur.get(row.pivot)) {
      cur ^= row.vec;
      for (std::size_t b : row.combo.set_bits()) {
        combo[b] = !combo[b];
      }
    }
  }
  if (!cur.is_zero()) {
    return std::nullopt;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < combo.size(); ++i) {
    if (combo[i]) {
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace gsc
