#pragma once

#include "rankcode/field.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rankcode {

// Rank of the bit matrix whose columns are the given words.
unsigned column_rank(std::span<const std::uint16_t> cols);

// Dense GF(2) matrix with at most 64 columns; one word per row, bit j = column j.
class Gf2Matrix {
 public:
  static constexpr unsigned kMaxCols = 64;

  Gf2Matrix() = default;
  Gf2Matrix(unsigned rows, unsigned cols);
  static Gf2Matrix identity(unsigned n);

  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }
  bool get(unsigned r, unsigned c) const { return (data_[r] >> c) & 1; }
  void set(unsigned r, unsigned c, bool v);
  std::uint64_t row(unsigned r) const { return data_[r]; }
  void set_row(unsigned r, std::uint64_t bits);

  Gf2Matrix transpose() const;
  bool operator==(const Gf2Matrix& o) const = default;

 private:
  unsigned rows_ = 0, cols_ = 0;
  std::vector<std::uint64_t> data_;
};

unsigned gf2_rank(const Gf2Matrix& m);

inline constexpr unsigned kMaxLength = 16;
// Coordinates beyond the vector length are kept zero so packed words compare and XOR cleanly.
using Packed = std::array<std::uint16_t, kMaxLength>;

// Length-n vector over GF(2^N); coordinates are raw field words.
class RankVector {
 public:
  RankVector(FieldRef ctx, std::span<const std::uint16_t> coords);
  RankVector(FieldRef ctx, unsigned n, const Packed& packed);
  static RankVector zero(FieldRef ctx, unsigned n);
  static RankVector from_elements(std::span<const FieldElement> elems);

  const FieldRef& field() const { return ctx_; }
  unsigned length() const { return n_; }
  std::uint16_t operator[](unsigned i) const { return c_[i]; }
  FieldElement at(unsigned i) const { return FieldElement(ctx_, c_[i]); }
  const Packed& packed() const { return c_; }
  bool is_zero() const;

  RankVector operator+(const RankVector& o) const;
  RankVector operator-(const RankVector& o) const { return *this + o; }
  RankVector scaled(std::uint16_t a) const;
  bool operator==(const RankVector& o) const;

  // Space-separated hex coordinates.
  std::string to_string() const;

 private:
  FieldRef ctx_;
  unsigned n_;
  Packed c_{};
};

// N x n bit matrix; column j holds the coefficient bits of coordinate j.
Gf2Matrix expand(const RankVector& x);

}  // namespace rankcode
