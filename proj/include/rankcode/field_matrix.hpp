#pragma once

#include "rankcode/field.hpp"
#include "rankcode/gf2.hpp"

#include <cstdint>
#include <vector>

namespace rankcode {

// Dense matrix over GF(2^N), row-major raw field words.
class FieldMatrix {
 public:
  FieldMatrix(FieldRef ctx, unsigned rows, unsigned cols);
  FieldMatrix(FieldRef ctx, unsigned rows, unsigned cols, std::vector<std::uint16_t> data);
  static FieldMatrix identity(FieldRef ctx, unsigned n);
  static FieldMatrix from_rows(const std::vector<RankVector>& rows);

  const FieldRef& field() const { return ctx_; }
  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }
  std::uint16_t operator()(unsigned r, unsigned c) const { return data_[r * cols_ + c]; }
  void set(unsigned r, unsigned c, std::uint16_t v);
  FieldElement at(unsigned r, unsigned c) const { return FieldElement(ctx_, (*this)(r, c)); }

  RankVector row_vector(unsigned r) const;
  FieldMatrix transpose() const;
  FieldMatrix operator*(const FieldMatrix& o) const;
  bool is_zero() const;
  bool operator==(const FieldMatrix& o) const;

 private:
  FieldRef ctx_;
  unsigned rows_, cols_;
  std::vector<std::uint16_t> data_;
};

struct Echelon {
  FieldMatrix reduced;            // reduced row echelon form, zero rows dropped
  std::vector<unsigned> pivots;   // pivot column of each row
};

Echelon row_reduce(const FieldMatrix& m);
unsigned field_rank(const FieldMatrix& m);
// Rows form a basis of {x : m * x^T = 0}; zero rows when m has full column rank.
FieldMatrix null_space(const FieldMatrix& m);
// x * m^T, i.e. the syndrome of x for a parity-check matrix m.
std::vector<std::uint16_t> times_transpose(const RankVector& x, const FieldMatrix& m);

}  // namespace rankcode
